#include "dtcell/cluster.hpp"

#include <sstream>

#include "dtcell/error.hpp"

namespace dtcell::cluster {

namespace {

void check_mutable(const Seed& s, int k) {
  if (!s.contains(k)) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(k));
  if (s.is_frozen(k)) fail(ErrorKind::FrozenVertex, "vertex " + std::to_string(k) + " is frozen");
}

void check_kind(const ClusterAssignment& c, CoordKind kind) {
  if (c.kind != kind)
    fail(ErrorKind::InvalidArgument, kind == CoordKind::A ? "expected A-coordinates" : "expected X-coordinates");
}

std::string seed_mismatch(const Seed& expected, const Seed& got) {
  return "expected seed " + expected.to_string() + ", got " + got.to_string();
}

}  // namespace

ClusterAssignment ClusterAssignment::symbolic(const Seed& seed, CoordKind kind) {
  ClusterAssignment c{seed, kind, {}};
  for (int v : seed.vertices()) c.values.emplace(v, RatFunc::variable(static_cast<exact::VarId>(v)));
  return c;
}

const RatFunc& ClusterAssignment::at(int v) const {
  auto it = values.find(v);
  if (it == values.end()) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  return it->second;
}

ClusterAssignment ClusterAssignment::unfrozen_part() const {
  ClusterAssignment out{seed.without_frozen(), kind, {}};
  for (int v : out.seed.vertices()) out.values.emplace(v, at(v));
  return out;
}

Seed mutate_seed(const Seed& s, int k) {
  check_mutable(s, k);
  Seed out(s.vertices(), s.frozen());
  const std::vector<int> vs(s.vertices().begin(), s.vertices().end());
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const int i = vs[a], j = vs[b];
      const int e = s.eps(i, j);
      if (i == k || j == k) {
        out.set_eps(i, j, -e);
        continue;
      }
      const int eik = s.eps(i, k), ekj = s.eps(k, j);
      out.set_eps(i, j, eik * ekj > 0 ? e + std::abs(eik) * ekj : e);
    }
  return out;
}

ClusterAssignment mutate_A(const ClusterAssignment& a, int k) {
  check_kind(a, CoordKind::A);
  check_mutable(a.seed, k);
  RatFunc pos(1), neg(1);
  for (int j : a.seed.vertices()) {
    const int e = a.seed.eps(k, j);
    if (e > 0) pos *= a.at(j).pow(e);
    if (e < 0) neg *= a.at(j).pow(-e);
  }
  ClusterAssignment out = a;
  out.seed = mutate_seed(a.seed, k);
  out.values[k] = (pos + neg) / a.at(k);
  return out;
}

ClusterAssignment mutate_X(const ClusterAssignment& x, int k) {
  check_kind(x, CoordKind::X);
  check_mutable(x.seed, k);
  const RatFunc& xk = x.at(k);
  ClusterAssignment out = x;
  out.seed = mutate_seed(x.seed, k);
  for (auto& [i, value] : out.values) {
    if (i == k) {
      value = xk.inverse();
      continue;
    }
    const int e = x.seed.eps(i, k);
    if (e == 0) continue;
    const RatFunc base = RatFunc(1) + (e > 0 ? xk.inverse() : xk);
    value *= base.pow(-e);
  }
  return out;
}

ClusterAssignment mutate(const ClusterAssignment& c, int k) {
  return c.kind == CoordKind::A ? mutate_A(c, k) : mutate_X(c, k);
}

ClusterAssignment p_map(const ClusterAssignment& a) {
  check_kind(a, CoordKind::A);
  ClusterAssignment out{a.seed, CoordKind::X, {}};
  for (int i : a.seed.vertices()) {
    RatFunc v(1);
    for (int j : a.seed.vertices()) {
      const int e = a.seed.eps(i, j);
      if (e != 0) v *= a.at(j).pow(e);
    }
    out.values.emplace(i, std::move(v));
  }
  return out;
}

ClusterAssignment apply_iso(const ClusterAssignment& c, const std::map<int, int>& sigma,
                            const std::optional<Seed>& target) {
  Seed moved = c.seed.relabeled(sigma);
  const Seed& expected = target ? *target : c.seed;
  if (!(moved == expected)) fail(ErrorKind::NotSeedIsomorphism, seed_mismatch(expected, moved));
  ClusterAssignment out{std::move(moved), c.kind, {}};
  for (const auto& [i, value] : c.values) out.values.emplace(sigma.at(i), value);
  return out;
}

ClusterAssignment i_X(const ClusterAssignment& x) {
  check_kind(x, CoordKind::X);
  ClusterAssignment out{x.seed.negated(), CoordKind::X, {}};
  for (const auto& [i, value] : x.values) out.values.emplace(i, value.inverse());
  return out;
}

int TransformationPlan::mutation_count() const {
  int count = 0;
  for (const auto& step : steps) count += std::holds_alternative<MutationStep>(step);
  return count;
}

void TransformationPlan::validate() const {
  Seed cur = source;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    if (const auto* m = std::get_if<MutationStep>(&steps[t])) {
      cur = mutate_seed(cur, m->vertex);
    } else {
      const auto& iso = std::get<IsoStep>(steps[t]);
      Seed moved = cur.relabeled(iso.sigma);
      if (!(moved == iso.target))
        fail(ErrorKind::SeedMismatch, "step " + std::to_string(t) + ": " + seed_mismatch(iso.target, moved));
      cur = iso.target;
    }
  }
  if (!(cur == target)) fail(ErrorKind::SeedMismatch, "plan end: " + seed_mismatch(target, cur));
}

std::string TransformationPlan::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t t = 0; t < steps.size(); ++t) {
    if (t) os << ", ";
    if (const auto* m = std::get_if<MutationStep>(&steps[t])) {
      os << "mu_" << m->vertex;
    } else {
      os << "iso{";
      bool first = true;
      for (const auto& [a, b] : std::get<IsoStep>(steps[t]).sigma) {
        if (!first) os << ",";
        first = false;
        os << a << "->" << b;
      }
      os << "}";
    }
  }
  os << "]";
  return os.str();
}

ClusterAssignment run_plan(const ClusterAssignment& c, const TransformationPlan& plan) {
  if (!(c.seed == plan.source)) fail(ErrorKind::SeedMismatch, "plan source: " + seed_mismatch(plan.source, c.seed));
  ClusterAssignment cur = c;
  for (const auto& step : plan.steps) {
    if (const auto* m = std::get_if<MutationStep>(&step)) cur = mutate(cur, m->vertex);
    else {
      const auto& iso = std::get<IsoStep>(step);
      try {
        cur = apply_iso(cur, iso.sigma, iso.target);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotSeedIsomorphism) fail(ErrorKind::SeedMismatch, e.what());
        throw;
      }
    }
  }
  return cur;
}

}  // namespace dtcell::cluster
