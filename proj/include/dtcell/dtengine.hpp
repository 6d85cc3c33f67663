#pragma once

// The Donaldson-Thomas pipeline on double Bruhat cells of GL_n: amalgamation,
// face minors, X-coordinates, the Gaussian-decomposition closed form,
// equality modulo diagonal scaling, the tropical degree test, the mutation
// plan realizing DT and the twist D_X = i_X o DT.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dtcell/cluster.hpp"
#include "dtcell/matrix.hpp"
#include "dtcell/plabic.hpp"
#include "dtcell/weyl.hpp"

namespace dtcell::dt {

using cluster::ClusterAssignment;
using cluster::TransformationPlan;
using exact::RatFunc;
using exact::Rational;
using exact::RFMatrix;

using FaceValues = std::map<int, RatFunc>;
using Point = std::map<exact::VarId, Rational>;

// One factor of the amalgamation product. Edge factors sit at slot
// 2 * column + 1; a face factor may sit at any even slot in [lo, hi] without
// changing the product.
struct AmalgamationFactor {
  exact::GenKind kind;
  int index = 0;
  int face = -1;  // face id for Cartan factors
  int lo = 0, hi = 0;
};

// Factors in the canonical order: each face right after its left edge.
std::vector<AmalgamationFactor> amalgamation_factors(const plabic::BipartiteGraph& g);
// Product of the given factors in the given order; every face value must be
// present and nonzero (ZeroFaceValue otherwise).
RFMatrix multiply_factors(int n, const std::vector<AmalgamationFactor>& factors, const FaceValues& values);

RFMatrix amalgamate(const plabic::BipartiteGraph& g, const FaceValues& values);
RFMatrix amalgamate(const weyl::SignedWord& w, const FaceValues& values);

// The variable X_f for every face; boundary faces get 1 when lifted.
FaceValues symbolic_faces(const plabic::BipartiteGraph& g, bool boundary_one = false);
// Values of an assignment on the unfrozen faces, boundary faces set to 1.
FaceValues lift_values(const plabic::BipartiteGraph& g, const ClusterAssignment& x);

// A_f = Delta^{I(f), J(f)}(x) on the full quiver; NonGenericPoint names the
// first vanishing face.
ClusterAssignment psi_faces(const plabic::BipartiteGraph& g, const RFMatrix& x);
ClusterAssignment psi_faces(const weyl::SignedWord& w, const RFMatrix& x);
// X_g = prod_f A_f^{eps_gf} over the full quiver, kept for unfrozen g.
ClusterAssignment x_coords(const plabic::BipartiteGraph& g, const RFMatrix& x);
ClusterAssignment x_coords(const weyl::SignedWord& w, const RFMatrix& x);

// ([u^-1 x]_-^-1 u^-1 x v^-1 [x v^-1]_+^-1)^t with the lifted Weyl elements.
RFMatrix dt_closed_form(const weyl::SignedWord& w, const RFMatrix& x);
// chi(psi(x)): amalgamation of the X-coordinates of x with boundary faces 1.
RFMatrix chi_psi(const weyl::SignedWord& w, const RFMatrix& x);

// True iff m1 = D m2 D' for invertible diagonal D, D'. Throws SingularMatrix
// when either matrix is singular.
bool check_H_equiv(const RFMatrix& m1, const RFMatrix& m2);

// DT^*(X_g) for every unfrozen face g: psi o chi applied to symbolic
// coordinates.
ClusterAssignment dt_pullback(const weyl::SignedWord& w);
// psi(closed form(chi(X))); this is the square of dt_pullback.
ClusterAssignment dt_pullback_closed_form(const weyl::SignedWord& w);
// Substitutes the values of `inner` for the variables of `outer`.
ClusterAssignment compose(const ClusterAssignment& outer, const ClusterAssignment& inner);
ClusterAssignment evaluate(const ClusterAssignment& c, const Point& point);

struct DegreeMatrix {
  std::vector<int> faces;
  // entries[a][b] = deg_{X_faces[a]} DT^*(X_faces[b]).
  std::vector<std::vector<int>> entries;
  bool is_minus_identity() const;
};

DegreeMatrix degree_matrix(const ClusterAssignment& pullback);
DegreeMatrix tropical_dt_check(const weyl::SignedWord& w);

struct PlanInfo {
  TransformationPlan plan;
  std::vector<std::vector<int>> words;  // letter sequences visited, in order
  int braid_moves = 0;
};

// Mutation sequence realizing DT on the unfrozen quiver of w; vertices are
// labeled by the faces of w.
PlanInfo plan_dt_sequence(const weyl::SignedWord& w);

// Compares run_plan on symbolic coordinates with dt_pullback, either fully
// symbolically (points empty) or at the given points. Throws
// PlanVerificationFailed naming the first mismatching face.
void verify_plan(const weyl::SignedWord& w, const TransformationPlan& plan, const std::vector<Point>& points = {});

// Checks chi_{w'}(mu(X)) = chi_w(X) for symbolic face values and the matching
// exchange relations on face minors.
bool verify_move_diagrams(const weyl::SignedWord& w, const weyl::WordMove& m);

// D_X = i_X o DT as an assignment on the unfrozen quiver of the reversed word.
ClusterAssignment twist(const weyl::SignedWord& w);
// Seeded points with coordinates p/q, 1 <= p, q <= 10^6, one per variable.
std::vector<Point> random_points(const std::vector<exact::VarId>& vars, int count, std::uint64_t seed);

}  // namespace dtcell::dt
