#pragma once

// Seed mutation, cluster A- and X-mutations, the p-map, cluster isomorphisms,
// the involution i_X and replayable transformation plans.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dtcell/ratfunc.hpp"
#include "dtcell/seed.hpp"

namespace dtcell::cluster {

using exact::RatFunc;

enum class CoordKind { A, X };

struct ClusterAssignment {
  Seed seed;
  CoordKind kind = CoordKind::X;
  std::map<int, RatFunc> values;

  // Assignment of the variable with id v to every vertex v.
  static ClusterAssignment symbolic(const Seed& seed, CoordKind kind);
  const RatFunc& at(int v) const;
  // Restriction to the unfrozen vertices, on the seed without frozen vertices.
  ClusterAssignment unfrozen_part() const;
};

Seed mutate_seed(const Seed& s, int k);
ClusterAssignment mutate_A(const ClusterAssignment& a, int k);
ClusterAssignment mutate_X(const ClusterAssignment& x, int k);
// Dispatches on the assignment kind.
ClusterAssignment mutate(const ClusterAssignment& c, int k);

// X_i = prod_j A_j^{eps_ij}.
ClusterAssignment p_map(const ClusterAssignment& a);

// Relabels by sigma: the value at sigma(i) becomes the old value at i. The
// relabeled seed must equal target (the source seed when omitted).
ClusterAssignment apply_iso(const ClusterAssignment& c, const std::map<int, int>& sigma,
                            const std::optional<Seed>& target = std::nullopt);

// Values inverted on the opposite seed.
ClusterAssignment i_X(const ClusterAssignment& x);

struct MutationStep {
  int vertex;
};
struct IsoStep {
  std::map<int, int> sigma;
  Seed target;
};
using PlanStep = std::variant<MutationStep, IsoStep>;

struct TransformationPlan {
  Seed source;
  Seed target;
  std::vector<PlanStep> steps;

  int mutation_count() const;
  // Checks that every step applies to the seed produced by the previous one
  // and that the last seed equals target; throws SeedMismatch otherwise.
  void validate() const;
  std::string to_string() const;
};

ClusterAssignment run_plan(const ClusterAssignment& c, const TransformationPlan& plan);

}  // namespace dtcell::cluster
