#include "dtcell/dtengine.hpp"

#include <algorithm>
#include <queue>
#include <random>

#include "dtcell/error.hpp"
#include "dtcell/tropical.hpp"

namespace dtcell::dt {

using exact::GenKind;
using exact::LaurentPoly;
using exact::VarId;
using plabic::BipartiteGraph;

namespace {

std::string face_name(int f) { return "face " + std::to_string(f); }

std::string label(const plabic::Face& f) {
  auto join = [](const std::vector<int>& s) {
    std::string out;
    for (int v : s) out += std::to_string(v);
    return out.empty() ? std::string("{}") : out;
  };
  return "Delta^{" + join(f.rows) + "," + join(f.cols) + "}";
}

void collect_vars(const RatFunc& f, std::set<VarId>& out) {
  for (VarId v : f.num().variables()) out.insert(v);
  for (VarId v : f.den().variables()) out.insert(v);
}

// Exact determinant of a constant matrix by fraction-free elimination over Q.
Rational constant_determinant(const RFMatrix& m) {
  const int n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j).constant_value();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational factor = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

// Decides singularity at a seeded random point first and symbolically only
// when the point is degenerate.
bool is_singular(const RFMatrix& m) {
  std::set<VarId> vars;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) collect_vars(m(i, j), vars);
  try {
    auto point = random_points(std::vector<VarId>(vars.begin(), vars.end()), 1, 97).front();
    if (constant_determinant(m.specialize(point)) != 0) return false;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonGenericPoint) throw;
  }
  return m.determinant().is_zero();
}

[[noreturn]] void plan_failure(const std::string& what) { fail(ErrorKind::PlanVerificationFailed, what); }

}  // namespace

std::vector<AmalgamationFactor> amalgamation_factors(const BipartiteGraph& g) {
  const int n = g.rank();
  const auto& letters = g.letters();
  const int len = static_cast<int>(letters.size());
  auto face_hi = [&](const plabic::Face& f) { return f.right_column < 0 ? 2 * len : 2 * f.right_column; };
  std::vector<AmalgamationFactor> out;
  out.push_back({GenKind::Cartan, 0, g.face_at(0, 0), 0, 2 * len});
  for (int s = 1; s <= n; ++s) {
    const auto& f = g.face(g.face_at(s, 0));
    out.push_back({GenKind::Cartan, s, f.id, 0, face_hi(f)});
  }
  for (int p = 0; p < len; ++p) {
    const int s = std::abs(letters[p]);
    out.push_back({letters[p] > 0 ? GenKind::Upper : GenKind::Lower, s, -1, 2 * p + 1, 2 * p + 1});
    const auto& f = g.face(*g.face_with_left_column(s, p));
    out.push_back({GenKind::Cartan, s, f.id, 2 * p + 2, face_hi(f)});
  }
  return out;
}

RFMatrix multiply_factors(int n, const std::vector<AmalgamationFactor>& factors, const FaceValues& values) {
  RFMatrix m = RFMatrix::identity(n);
  for (const auto& f : factors) {
    const int i = f.index;
    switch (f.kind) {
      case GenKind::Upper:
        // Right multiplication by I + E_{i,i+1}: column i+1 += column i.
        for (int r = 0; r < n; ++r)
          if (!m(r, i - 1).is_zero()) m(r, i) += m(r, i - 1);
        break;
      case GenKind::Lower:
        for (int r = 0; r < n; ++r)
          if (!m(r, i).is_zero()) m(r, i - 1) += m(r, i);
        break;
      case GenKind::Cartan: {
        auto it = values.find(f.face);
        if (it == values.end()) fail(ErrorKind::InvalidArgument, "no value for " + face_name(f.face));
        if (it->second.is_zero()) fail(ErrorKind::ZeroFaceValue, face_name(f.face));
        for (int c = 0; c < i; ++c)
          for (int r = 0; r < n; ++r)
            if (!m(r, c).is_zero()) m(r, c) *= it->second;
        break;
      }
    }
  }
  return m;
}

RFMatrix amalgamate(const BipartiteGraph& g, const FaceValues& values) {
  return multiply_factors(g.rank(), amalgamation_factors(g), values);
}

RFMatrix amalgamate(const weyl::SignedWord& w, const FaceValues& values) {
  return amalgamate(plabic::build_graph(w), values);
}

FaceValues symbolic_faces(const BipartiteGraph& g, bool boundary_one) {
  FaceValues out;
  for (const auto& f : g.faces())
    out.emplace(f.id, boundary_one && f.boundary ? RatFunc(1) : RatFunc::variable(static_cast<VarId>(f.id)));
  return out;
}

FaceValues lift_values(const BipartiteGraph& g, const ClusterAssignment& x) {
  FaceValues out;
  for (const auto& f : g.faces()) out.emplace(f.id, f.boundary ? RatFunc(1) : x.at(f.id));
  return out;
}

ClusterAssignment psi_faces(const BipartiteGraph& g, const RFMatrix& x) {
  if (x.rows() != g.rank() || x.cols() != g.rank()) fail(ErrorKind::InvalidArgument, "matrix size does not match rank");
  ClusterAssignment a{plabic::build_quivers(g).full, cluster::CoordKind::A, {}};
  for (const auto& f : g.faces()) {
    RatFunc m = exact::minor(x, f.rows, f.cols);
    if (m.is_zero()) fail(ErrorKind::NonGenericPoint, face_name(f.id) + ": " + label(f) + " vanishes");
    a.values.emplace(f.id, std::move(m));
  }
  return a;
}

ClusterAssignment psi_faces(const weyl::SignedWord& w, const RFMatrix& x) {
  return psi_faces(plabic::build_graph(w), x);
}

ClusterAssignment x_coords(const BipartiteGraph& g, const RFMatrix& x) {
  const auto a = psi_faces(g, x);
  const Seed& full = a.seed;
  bool laurent = true;
  for (const auto& [f, value] : a.values) laurent = laurent && value.is_laurent();
  ClusterAssignment out{full.without_frozen(), cluster::CoordKind::X, {}};
  for (int gface : full.mutable_vertices()) {
    if (laurent) {
      // Multiply numerator and denominator separately and normalize once.
      LaurentPoly num(1), den(1);
      for (const auto& [f, value] : a.values) {
        const int e = full.eps(gface, f);
        if (e > 0) {
          num *= value.num().pow(e);
          den *= value.den().pow(e);
        } else if (e < 0) {
          num *= value.den().pow(-e);
          den *= value.num().pow(-e);
        }
      }
      out.values.emplace(gface, RatFunc(std::move(num), std::move(den)));
    } else {
      RatFunc v(1);
      for (const auto& [f, value] : a.values) {
        const int e = full.eps(gface, f);
        if (e != 0) v *= value.pow(e);
      }
      out.values.emplace(gface, std::move(v));
    }
  }
  return out;
}

ClusterAssignment x_coords(const weyl::SignedWord& w, const RFMatrix& x) {
  return x_coords(plabic::build_graph(w), x);
}

RFMatrix dt_closed_form(const weyl::SignedWord& w, const RFMatrix& x) {
  const int n = w.rank();
  if (x.rows() != n || x.cols() != n) fail(ErrorKind::InvalidArgument, "matrix size does not match rank");
  auto v_letters = w.v_word();
  std::reverse(v_letters.begin(), v_letters.end());
  // Lifted Weyl elements are signed permutation matrices: inverse = transpose.
  const RFMatrix u_inv = exact::lift_word(n, w.u_word()).transpose();
  const RFMatrix v_inv = exact::lift_word(n, v_letters);
  const RFMatrix left = u_inv * x;
  const RFMatrix right = x * v_inv;
  const RFMatrix lower = exact::gauss_decompose(left).lower;
  const RFMatrix upper = exact::gauss_decompose(right).upper;
  return (exact::unipotent_inverse(lower) * left * v_inv * exact::unipotent_inverse(upper)).transpose();
}

RFMatrix chi_psi(const weyl::SignedWord& w, const RFMatrix& x) {
  const auto g = plabic::build_graph(w);
  return amalgamate(g, lift_values(g, x_coords(g, x)));
}

bool check_H_equiv(const RFMatrix& m1, const RFMatrix& m2) {
  const int n = m1.rows();
  if (m1.cols() != n || m2.rows() != n || m2.cols() != n) return false;
  if (is_singular(m1) || is_singular(m2)) fail(ErrorKind::SingularMatrix, "H x H comparison of a singular matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m1(i, j).is_zero() != m2(i, j).is_zero()) return false;
  // Solve r_ij = d_i d'_j along a spanning forest of the nonzero pattern
  // (rows are nodes 0..n-1, columns n..2n-1), then check every entry.
  std::vector<std::optional<RatFunc>> d(2 * n);
  for (int root = 0; root < 2 * n; ++root) {
    if (d[root]) continue;
    d[root] = RatFunc(1);
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      const int a = todo.front();
      todo.pop();
      for (int b = 0; b < n; ++b) {
        const int i = a < n ? a : b, j = a < n ? b : a - n;
        const int other = a < n ? n + b : b;
        if (m1(i, j).is_zero() || d[other]) continue;
        d[other] = m1(i, j) / (m2(i, j) * *d[a]);
        todo.push(other);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!m1(i, j).is_zero() && !(m1(i, j) == *d[i] * *d[n + j] * m2(i, j))) return false;
  return true;
}

ClusterAssignment dt_pullback(const weyl::SignedWord& w) {
  const auto g = plabic::build_graph(w);
  return x_coords(g, amalgamate(g, symbolic_faces(g, true)));
}

ClusterAssignment dt_pullback_closed_form(const weyl::SignedWord& w) {
  const auto g = plabic::build_graph(w);
  return x_coords(g, dt_closed_form(w, amalgamate(g, symbolic_faces(g, true))));
}

ClusterAssignment compose(const ClusterAssignment& outer, const ClusterAssignment& inner) {
  std::map<VarId, RatFunc> subs;
  for (const auto& [v, value] : inner.values) subs.emplace(static_cast<VarId>(v), value);
  ClusterAssignment out{outer.seed, outer.kind, {}};
  for (const auto& [v, value] : outer.values) out.values.emplace(v, value.substitute(subs));
  return out;
}

ClusterAssignment evaluate(const ClusterAssignment& c, const Point& point) {
  ClusterAssignment out{c.seed, c.kind, {}};
  for (const auto& [v, value] : c.values) out.values.emplace(v, RatFunc(value.evaluate(point)));
  return out;
}

bool DegreeMatrix::is_minus_identity() const {
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = 0; b < entries[a].size(); ++b)
      if (entries[a][b] != (a == b ? -1 : 0)) return false;
  return true;
}

DegreeMatrix degree_matrix(const ClusterAssignment& pullback) {
  DegreeMatrix m;
  for (const auto& [v, value] : pullback.values) m.faces.push_back(v);
  for (int f : m.faces) {
    std::vector<int> row;
    for (int g : m.faces) row.push_back(exact::top_degree(pullback.at(g), static_cast<VarId>(f)));
    m.entries.push_back(std::move(row));
  }
  return m;
}

DegreeMatrix tropical_dt_check(const weyl::SignedWord& w) { return degree_matrix(dt_pullback(w)); }

namespace {

// Planner state: the current letters, their graph and the working label of
// every current face (labels are faces of the source word).
struct PlanState {
  int n;
  std::vector<int> letters;
  BipartiteGraph graph;
  std::vector<int> label_of;
  PlanInfo* info;

  Seed labeled_seed() const {
    const Seed reduced = plabic::build_quivers(graph).reduced;
    std::map<int, int> m;
    for (int f : reduced.vertices()) m.emplace(f, label_of[f]);
    return reduced.relabeled(m);
  }

  void move(const weyl::WordMove& mv) {
    const Seed before = labeled_seed();
    auto next = weyl::apply_move(letters, mv);
    auto next_graph = BipartiteGraph::build(n, next);
    auto fc = plabic::move_face_map(graph, next_graph, mv);
    Seed expected = before;
    if (fc.mutated_old) {
      const int k = label_of[*fc.mutated_old];
      info->plan.steps.push_back(cluster::MutationStep{k});
      expected = cluster::mutate_seed(before, k);
    }
    if (mv.kind == weyl::MoveKind::Braid) ++info->braid_moves;
    std::vector<int> next_label(next_graph.face_count(), -1);
    for (int f = 0; f < graph.face_count(); ++f) next_label[fc.old_to_new[f]] = label_of[f];
    letters = std::move(next);
    graph = std::move(next_graph);
    label_of = std::move(next_label);
    info->words.push_back(letters);
    if (!(labeled_seed() == expected))
      plan_failure("quiver after " + std::string(weyl::to_string(mv.kind)) + " at " + std::to_string(mv.position) +
                   " does not match the mutated quiver");
  }

  void flip(std::size_t pos) {
    const Seed before = labeled_seed();
    letters[pos] = -letters[pos];
    graph = BipartiteGraph::build(n, letters);
    info->words.push_back(letters);
    if (!(labeled_seed() == before)) plan_failure("flipping letter " + std::to_string(pos) + " changed the quiver");
  }
};

weyl::WordMove swap_move(const std::vector<int>& letters, std::size_t p) {
  const int a = letters[p], b = letters[p + 1];
  return {a == -b ? weyl::MoveKind::SameIndexSwap : weyl::MoveKind::MixedSwap, p};
}

weyl::WordMove inverse_move(const weyl::WordMove& m) {
  weyl::WordMove r = m;
  if (m.kind == weyl::MoveKind::Braid)
    r.direction = m.direction == weyl::Direction::Forward ? weyl::Direction::Backward : weyl::Direction::Forward;
  return r;
}

}  // namespace

PlanInfo plan_dt_sequence(const weyl::SignedWord& w) {
  const int n = w.rank();
  PlanInfo info;
  const auto source_graph = plabic::build_graph(w);
  info.plan.source = plabic::build_quivers(source_graph).reduced;
  info.plan.target = info.plan.source;
  PlanState st{n, w.letters(), source_graph, {}, &info};
  st.label_of.resize(source_graph.face_count());
  for (int f = 0; f < source_graph.face_count(); ++f) st.label_of[f] = f;
  info.words.push_back(st.letters);

  // Normalize to split form: negative letters first.
  std::vector<weyl::WordMove> normalization;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p + 1 < st.letters.size(); ++p) {
      if (st.letters[p] > 0 && st.letters[p + 1] < 0) {
        auto mv = swap_move(st.letters, p);
        normalization.push_back(mv);
        st.move(mv);
        changed = true;
        break;
      }
    }
  }
  const std::vector<int> split = st.letters;
  const auto split_graph = BipartiteGraph::build(n, split);
  const std::size_t m = w.u_word().size();
  const std::size_t len = split.size();

  // u-part: the leftmost negative letter is flipped and carried right past
  // the remaining negative letters.
  for (std::size_t k = 0; k < m; ++k) {
    st.flip(0);
    for (std::size_t p = 0; p + 1 < m - k; ++p) st.move(swap_move(st.letters, p));
  }
  // v-part: the rightmost positive letter is flipped and carried left past
  // every positive letter before it.
  for (std::size_t k = 0; k < len - m; ++k) {
    st.flip(len - 1);
    for (std::size_t p = len - 1; p > k; --p) st.move(swap_move(st.letters, p - 1));
  }
  // The current word is the transpose of the split word: reversed with signs
  // swapped. Its faces correspond to the split faces by the mirror map.
  {
    auto mirror = plabic::mirror_face_map(st.graph);
    std::vector<int> transposed(st.letters.rbegin(), st.letters.rend());
    for (int& l : transposed) l = -l;
    if (transposed != split) plan_failure("tilting did not end at the transposed word");
    const Seed before = st.labeled_seed();
    std::vector<int> next_label(split_graph.face_count());
    for (int f = 0; f < st.graph.face_count(); ++f) next_label[mirror[f]] = st.label_of[f];
    st.letters = split;
    st.graph = split_graph;
    st.label_of = std::move(next_label);
    if (!(st.labeled_seed() == before)) plan_failure("transposition is not a quiver isomorphism");
  }
  // Undo the normalization, then return to the source labels.
  for (auto it = normalization.rbegin(); it != normalization.rend(); ++it) st.move(inverse_move(*it));
  if (st.letters != w.letters()) plan_failure("normalization was not undone");
  std::map<int, int> sigma;
  for (int f : info.plan.source.vertices()) sigma.emplace(st.label_of[f], f);
  info.plan.steps.push_back(cluster::IsoStep{sigma, info.plan.target});
  info.plan.validate();
  return info;
}

void verify_plan(const weyl::SignedWord& w, const TransformationPlan& plan, const std::vector<Point>& points) {
  const auto expected = dt_pullback(w);
  const auto x = ClusterAssignment::symbolic(plan.source, cluster::CoordKind::X);
  auto report = [](int f) { plan_failure("plan and DT disagree at " + face_name(f)); };
  if (points.empty()) {
    const auto got = cluster::run_plan(x, plan);
    for (const auto& [f, value] : expected.values)
      if (!(got.at(f) == value)) report(f);
    return;
  }
  for (const auto& point : points) {
    const auto got = cluster::run_plan(evaluate(x, point), plan);
    for (const auto& [f, value] : expected.values)
      if (!(got.at(f) == RatFunc(value.evaluate(point)))) report(f);
  }
}

bool verify_move_diagrams(const weyl::SignedWord& w, const weyl::WordMove& m) {
  const auto g = plabic::build_graph(w);
  const auto w2 = weyl::apply_move(w, m);
  const auto g2 = plabic::build_graph(w2);
  const auto fc = plabic::move_face_map(g, g2, m);
  const Seed full = plabic::build_quivers(g).full;

  ClusterAssignment xs{full, cluster::CoordKind::X, symbolic_faces(g)};
  const RFMatrix lhs = amalgamate(g, xs.values);
  if (fc.mutated_old) xs = cluster::mutate_X(xs, *fc.mutated_old);
  FaceValues moved;
  for (const auto& [f, value] : xs.values) moved.emplace(fc.old_to_new[f], value);
  if (!(amalgamate(g2, moved) == lhs)) return false;

  auto as = psi_faces(g, lhs);
  if (fc.mutated_old) as = cluster::mutate_A(as, *fc.mutated_old);
  const auto as2 = psi_faces(g2, lhs);
  for (const auto& [f, value] : as.values)
    if (!(as2.at(fc.old_to_new[f]) == value)) return false;
  return true;
}

ClusterAssignment twist(const weyl::SignedWord& w) {
  const auto g = plabic::build_graph(w);
  const auto opposite = w.reversed();
  const Seed target = plabic::build_quivers(plabic::build_graph(opposite)).reduced;
  const auto mirror = plabic::mirror_face_map(g);
  const auto ix = cluster::i_X(dt_pullback(w));
  std::map<int, int> sigma;
  for (int f : ix.seed.vertices()) sigma.emplace(f, mirror[f]);
  return cluster::apply_iso(ix, sigma, target);
}

std::vector<Point> random_points(const std::vector<VarId>& vars, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1000000);
  std::vector<Point> out;
  for (int t = 0; t < count; ++t) {
    Point p;
    for (VarId v : vars) {
      Rational q(dist(rng), dist(rng));
      q.canonicalize();
      p.emplace(v, q);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace dtcell::dt
