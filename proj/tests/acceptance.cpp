// Acceptance suite: one PASS/FAIL line per criterion with its tolerance,
// runtime and budget. Exits nonzero when any criterion fails.

#include <bit>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "corpus.hpp"
#include "dtcell/cluster.hpp"
#include "dtcell/dtengine.hpp"
#include "dtcell/error.hpp"
#include "dtcell/plabic.hpp"
#include "dtcell/weyl.hpp"

using namespace dtcell;
using namespace dtcell::dt;
using exact::LaurentPoly;
using exact::VarId;
using weyl::Permutation;
using weyl::SignedWord;

namespace {

const std::vector<int> kExample{1, -2, 2, 1, -1, -2};

// Collects the first few failure witnesses of a criterion.
struct Outcome {
  int checks = 0;
  int failures = 0;
  std::string witness;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ < 3) witness += (witness.empty() ? "" : "; ") + what;
  }
};

RatFunc x(int f) { return RatFunc::variable(static_cast<VarId>(f)); }

RatFunc prod(std::initializer_list<int> faces) {
  RatFunc p(1);
  for (int f : faces) p *= x(f);
  return p;
}

SignedWord greedy(const char* u, const char* v) {
  return weyl::greedy_pair_word(Permutation::from_one_line(u), Permutation::from_one_line(v));
}

std::vector<VarId> unfrozen_vars(const SignedWord& w) {
  std::vector<VarId> out;
  for (int f : plabic::build_graph(w).interior_faces()) out.push_back(static_cast<VarId>(f));
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> square_index_pairs(int n) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (unsigned rows = 1; rows < (1u << n); ++rows)
    for (unsigned cols = 1; cols < (1u << n); ++cols) {
      if (std::popcount(rows) != std::popcount(cols)) continue;
      std::vector<int> I, J;
      for (int t = 0; t < n; ++t) {
        if (rows & (1u << t)) I.push_back(t + 1);
        if (cols & (1u << t)) J.push_back(t + 1);
      }
      out.emplace_back(I, J);
    }
  return out;
}

bool same_values(const ClusterAssignment& a, const ClusterAssignment& b) {
  if (!(a.seed == b.seed) || a.values.size() != b.values.size()) return false;
  for (const auto& [v, value] : a.values)
    if (!(b.values.count(v) && b.at(v) == value)) return false;
  return true;
}

Outcome amalgamation_golden() {
  Outcome o;
  auto g = plabic::build_graph(SignedWord(3, kExample));
  auto m = amalgamate(g, symbolic_faces(g));
  const RatFunc one(1);
  const std::vector<std::vector<RatFunc>> printed{
      {x(1) * (one + x(2) + x(2) * x(3)) * prod({4, 5, 6, 7, 8, 9}),
       prod({1, 5, 6}) * (one + x(7) + x(2) * x(7)) * prod({8, 9}), prod({1, 5, 6, 9})},
      {prod({4, 5, 6, 7, 8, 9}), prod({5, 6}) * (one + x(7)) * prod({8, 9}), prod({5, 6, 9})},
      {prod({4, 6, 7, 8, 9}), (one + x(6) + x(6) * x(7)) * prod({8, 9}), (one + x(6)) * x(9)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const std::string at = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      o.expect(m(i, j) == printed[i][j], at + " = " + m(i, j).to_string());
      o.expect(m(i, j).num().max_degree(0) == 0 && m(i, j).num().min_degree(0) == 0, at + " contains X0");
    }
  return o;
}

Outcome face_labels() {
  Outcome o;
  auto g = plabic::build_graph(SignedWord(3, kExample));
  using V = std::vector<int>;
  const std::set<std::pair<V, V>> printed{
      {{1}, {3}},       {{1}, {2}},       {{1}, {1}},       {{3}, {1}},       {{1, 2}, {2, 3}},
      {{1, 3}, {2, 3}}, {{1, 3}, {1, 2}}, {{2, 3}, {1, 2}}, {{}, {}},         {{1, 2, 3}, {1, 2, 3}}};
  std::set<std::pair<V, V>> got;
  for (const auto& f : g.faces()) got.emplace(f.rows, f.cols);
  o.expect(g.face_count() == 10, "face count " + std::to_string(g.face_count()));
  o.expect(got == printed, "label set differs");
  return o;
}

Outcome quiver_golden() {
  Outcome o;
  auto q = plabic::build_quivers(plabic::build_graph(SignedWord(3, kExample)));
  auto arrows = q.reduced.arrows();
  std::set<std::tuple<int, int, int>> got(arrows.begin(), arrows.end());
  o.expect(q.reduced.vertices() == std::set<int>{2, 3, 6, 7}, "vertices " + q.reduced.to_string());
  o.expect(got == std::set<std::tuple<int, int, int>>{{2, 7, 1}, {3, 2, 1}, {6, 2, 1}, {7, 3, 1}, {7, 6, 1}},
           "arrows " + q.reduced.to_string());
  return o;
}

Outcome greedy_golden() {
  Outcome o;
  auto w = greedy("321", "321");
  o.expect(w.letters() == std::vector<int>{-1, -2, -1, 1, 2, 1}, w.to_string());
  return o;
}

// Criteria 5 and 6 share the enumeration of minors.
struct MinorOutcomes {
  Outcome lgv, positivity;
};

MinorOutcomes minors_on_corpus() {
  MinorOutcomes out;
  auto words = testing::reduced_word_corpus(3);
  out.lgv.expect(words.size() >= 36, "corpus has " + std::to_string(words.size()) + " words");
  const auto index_pairs = square_index_pairs(3);
  for (const auto& w : words) {
    auto g = plabic::build_graph(w);
    auto m = amalgamate(g, symbolic_faces(g));
    for (const auto& [I, J] : index_pairs) {
      const auto d = exact::minor(m, I, J);
      const std::string at = w.to_string() + " minor " + weyl::format_letters(I) + "|" + weyl::format_letters(J);
      out.lgv.expect(d == RatFunc(plabic::lgv_minor(g, I, J)), at);
      out.positivity.expect(d.is_laurent() && d.num().has_nonnegative_coefficients() &&
                                d.den().has_nonnegative_coefficients(),
                            at);
    }
  }
  return out;
}

Outcome move_diagrams() {
  Outcome o;
  int moves = 0;
  for (const auto& w : testing::reduced_word_corpus(3))
    for (const auto& m : weyl::applicable_moves(w.letters())) {
      if (m.kind != weyl::MoveKind::SameIndexSwap && m.kind != weyl::MoveKind::Braid) continue;
      ++moves;
      bool ok = false;
      try {
        ok = verify_move_diagrams(w, m);
      } catch (const Error& e) {
        o.expect(false, w.to_string() + ": " + e.what());
        continue;
      }
      o.expect(ok, w.to_string() + " " + weyl::to_string(m.kind) + " at " + std::to_string(m.position));
    }
  o.expect(moves > 0, "no applicable moves");
  return o;
}

Outcome tropical() {
  Outcome o;
  auto check = [&](const SignedWord& w) {
    auto d = tropical_dt_check(w);
    o.expect(d.faces.size() == plabic::build_graph(w).interior_faces().size() && d.is_minus_identity(),
             w.to_string());
  };
  for (int n = 2; n <= 3; ++n)
    for (const auto& u : weyl::all_permutations(n))
      for (const auto& v : weyl::all_permutations(n)) check(weyl::greedy_pair_word(u, v));
  for (const auto& [u, v] : std::vector<std::pair<const char*, const char*>>{
           {"4321", "4321"}, {"2413", "3142"}, {"3412", "4321"}, {"4231", "2143"}, {"1234", "4321"}, {"3421", "4312"}})
    check(greedy(u, v));
  return o;
}

Outcome closed_form() {
  Outcome o;
  auto check = [&](const SignedWord& w) {
    auto g = plabic::build_graph(w);
    auto m = amalgamate(g, symbolic_faces(g));
    o.expect(check_H_equiv(dt_closed_form(w, m), chi_psi(w, m)), w.to_string());
  };
  for (const auto& u : weyl::all_permutations(2))
    for (const auto& v : weyl::all_permutations(2)) check(weyl::greedy_pair_word(u, v));
  check(greedy("321", "321"));
  return o;
}

Outcome plan_correctness() {
  Outcome o;
  auto check = [&](const SignedWord& w, const std::vector<Point>& points) {
    try {
      verify_plan(w, plan_dt_sequence(w).plan, points);
      o.expect(true, "");
    } catch (const Error& e) {
      o.expect(false, w.to_string() + ": " + e.what());
    }
  };
  for (const auto& u : weyl::all_permutations(2))
    for (const auto& v : weyl::all_permutations(2)) check(weyl::greedy_pair_word(u, v), {});
  auto w = greedy("321", "321");
  check(w, random_points(unfrozen_vars(w), 3, 41));
  check(w, {});
  return o;
}

Outcome involution() {
  Outcome o;
  for (const auto& u : weyl::all_permutations(2))
    for (const auto& v : weyl::all_permutations(2)) {
      auto w = weyl::greedy_pair_word(u, v);
      auto both = compose(twist(w.reversed()), twist(w));
      for (const auto& [f, value] : both.values) o.expect(value == x(f), w.to_string() + " face " + std::to_string(f));
    }
  auto w = greedy("321", "321");
  auto d = twist(w);
  auto back = twist(w.reversed());
  for (const auto& point : random_points(unfrozen_vars(w), 3, 17)) {
    Point mid;
    for (const auto& [f, value] : evaluate(d, point).values) mid.emplace(static_cast<VarId>(f), value.constant_value());
    for (const auto& [f, value] : evaluate(back, mid).values)
      o.expect(value.constant_value() == point.at(static_cast<VarId>(f)), w.to_string() + " face " + std::to_string(f));
  }
  return o;
}

Outcome cluster_laws() {
  using namespace cluster;
  Outcome o;
  auto seeds = testing::seed_corpus(3);
  for (const auto& s : testing::random_seeds(100, 11)) seeds.push_back(s);
  for (const auto& s : seeds) {
    auto a = ClusterAssignment::symbolic(s, CoordKind::A);
    auto xs = ClusterAssignment::symbolic(s, CoordKind::X);
    for (int k : s.mutable_vertices()) {
      const std::string at = s.to_string() + " at " + std::to_string(k);
      o.expect(mutate_seed(mutate_seed(s, k), k) == s, "seed " + at);
      o.expect(same_values(mutate_A(mutate_A(a, k), k), a), "A " + at);
      o.expect(same_values(mutate_X(mutate_X(xs, k), k), xs), "X " + at);
      o.expect(same_values(p_map(mutate_A(a, k)), mutate_X(p_map(a), k)), "p " + at);
      o.expect(same_values(i_X(mutate_X(xs, k)), mutate_X(i_X(xs), k)), "i_X " + at);
    }
  }
  return o;
}

void report(int number, const std::string& name, double budget_seconds, double seconds, const Outcome& o,
            bool& all_pass) {
  const bool pass = o.failures == 0 && o.checks > 0 && seconds <= budget_seconds;
  all_pass = all_pass && pass;
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << "  " << std::setw(2) << number << "  " << std::left << std::setw(34) << name
       << std::right << " tolerance exact  checks " << std::setw(6) << o.checks << "  " << std::fixed
       << std::setprecision(3) << seconds << "s / " << std::setprecision(0) << budget_seconds << "s";
  if (o.failures) line << "  failures " << o.failures << ": " << o.witness;
  if (seconds > budget_seconds) line << "  over budget";
  std::cout << line.str() << std::endl;
}

}  // namespace

int main() {
  bool all_pass = true;
  auto run = [&](int number, const std::string& name, double budget, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.expect(false, e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, name, budget, seconds, o, all_pass);
  };

  run(1, "amalgamation golden matrix", 1, amalgamation_golden);
  run(2, "face minor labels", 1, face_labels);
  run(3, "boundary-removed quiver", 1, quiver_golden);
  run(4, "greedy word of (w0, w0) in S3", 1, greedy_golden);

  const auto start = std::chrono::steady_clock::now();
  MinorOutcomes minors;
  try {
    minors = minors_on_corpus();
  } catch (const std::exception& e) {
    minors.lgv.expect(false, e.what());
  }
  const double minor_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(5, "LGV sums equal minors on S3 corpus", 300, minor_seconds, minors.lgv, all_pass);
  report(6, "minors are positive on S3 corpus", 300, minor_seconds, minors.positivity, all_pass);

  run(7, "move diagrams commute on S3 corpus", 300, move_diagrams);
  run(8, "tropical DT is minus the identity", 600, tropical);
  run(9, "closed form equals chi o psi", 900, closed_form);
  run(10, "mutation plan equals DT", 1800, plan_correctness);
  run(11, "twist is an involution", 600, involution);
  run(12, "cluster engine laws", 120, cluster_laws);
  return all_pass ? 0 : 1;
}
