#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "dtcell/cluster.hpp"
#include "dtcell/error.hpp"
#include "dtcell/plabic.hpp"

using namespace dtcell;
using namespace dtcell::cluster;
using exact::LaurentPoly;
using testing::random_seeds;

namespace {

RatFunc var(int v) { return RatFunc::variable(static_cast<exact::VarId>(v)); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

bool same_values(const ClusterAssignment& a, const ClusterAssignment& b) {
  if (!(a.seed == b.seed) || a.values.size() != b.values.size()) return false;
  for (const auto& [v, value] : a.values)
    if (!(b.values.count(v) && b.at(v) == value)) return false;
  return true;
}

bool subtraction_free(const RatFunc& f) {
  return f.num().has_nonnegative_coefficients() && f.den().has_nonnegative_coefficients();
}

}  // namespace

TEST_CASE("mutate_seed examples") {
  Seed one({1}, {});
  CHECK(mutate_seed(one, 1) == one);

  Seed s({1, 2}, {});
  s.set_eps(1, 2, 1);
  auto m = mutate_seed(s, 1);
  CHECK(m.eps(1, 2) == -1);
  CHECK(m.eps(2, 1) == 1);
  CHECK(mutate_seed(m, 1) == s);

  // Oriented triangle 1 -> 2 -> 3 -> 1: mutating at 2 cancels the arrow 3 -> 1.
  Seed tri({1, 2, 3}, {});
  tri.add_arrow(1, 2);
  tri.add_arrow(2, 3);
  tri.add_arrow(3, 1);
  auto t2 = mutate_seed(tri, 2);
  CHECK(t2.eps(1, 3) == 0);
  CHECK(t2.eps(2, 1) == 1);
  CHECK(t2.eps(3, 2) == 1);

  Seed fr({1, 2}, {2});
  CHECK(kind_of([&] { mutate_seed(fr, 2); }) == ErrorKind::FrozenVertex);
  CHECK(kind_of([&] { mutate_seed(fr, 7); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("mutate_A examples") {
  Seed one({1}, {});
  auto a = ClusterAssignment::symbolic(one, CoordKind::A);
  CHECK(mutate_A(a, 1).at(1) == RatFunc(2) / var(1));

  Seed s({1, 2}, {});
  s.set_eps(1, 2, 1);
  auto b = ClusterAssignment::symbolic(s, CoordKind::A);
  auto mb = mutate_A(b, 1);
  CHECK(mb.at(1) == (var(2) + RatFunc(1)) / var(1));
  CHECK(mb.at(2) == var(2));
  CHECK(same_values(mutate_A(mb, 1), b));
  CHECK(kind_of([&] { mutate_X(b, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("mutate_X examples") {
  Seed one({1}, {});
  auto x = ClusterAssignment::symbolic(one, CoordKind::X);
  CHECK(mutate_X(x, 1).at(1) == var(1).inverse());

  Seed s({1, 2}, {});
  s.set_eps(2, 1, -1);
  auto y = ClusterAssignment::symbolic(s, CoordKind::X);
  auto my = mutate_X(y, 1);
  CHECK(my.at(2) == var(2) * (RatFunc(1) + var(1)));
  CHECK(my.at(1) == var(1).inverse());
  CHECK(same_values(mutate_X(my, 1), y));
}

TEST_CASE("p_map examples") {
  Seed s({1, 2}, {});
  auto zero = p_map(ClusterAssignment::symbolic(s, CoordKind::A));
  CHECK(zero.at(1) == RatFunc(1));
  CHECK(zero.at(2) == RatFunc(1));
  s.set_eps(1, 2, 1);
  auto x = p_map(ClusterAssignment::symbolic(s, CoordKind::A));
  CHECK(x.kind == CoordKind::X);
  CHECK(x.at(1) == var(2));
  CHECK(x.at(2) == var(1).inverse());
}

TEST_CASE("apply_iso examples") {
  Seed iso({1, 2}, {});
  auto x = ClusterAssignment::symbolic(iso, CoordKind::X);
  CHECK(same_values(apply_iso(x, {{1, 1}, {2, 2}}), x));
  auto swapped = apply_iso(x, {{1, 2}, {2, 1}});
  CHECK(swapped.at(1) == var(2));
  CHECK(swapped.at(2) == var(1));

  Seed arrow({1, 2}, {});
  arrow.add_arrow(1, 2);
  auto y = ClusterAssignment::symbolic(arrow, CoordKind::X);
  CHECK(kind_of([&] { apply_iso(y, {{1, 2}, {2, 1}}); }) == ErrorKind::NotSeedIsomorphism);
  // Onto the opposite seed the transposition is an isomorphism.
  auto z = apply_iso(y, {{1, 2}, {2, 1}}, arrow.negated());
  CHECK(z.at(2) == var(1));
}

TEST_CASE("i_X examples") {
  Seed one({1}, {});
  auto x = ClusterAssignment::symbolic(one, CoordKind::X);
  auto ix = i_X(x);
  CHECK(ix.at(1) == var(1).inverse());
  CHECK(ix.seed == one);

  Seed s({1, 2, 3}, {3});
  s.add_arrow(1, 2, 2);
  s.add_arrow(3, 1);
  auto y = ClusterAssignment::symbolic(s, CoordKind::X);
  CHECK(i_X(y).seed.eps(1, 2) == -2);
  CHECK(same_values(i_X(i_X(y)), y));
}

TEST_CASE("run_plan examples") {
  Seed s({1, 2}, {});
  s.add_arrow(1, 2);
  auto x = ClusterAssignment::symbolic(s, CoordKind::X);
  TransformationPlan empty{s, s, {}};
  empty.validate();
  CHECK(same_values(run_plan(x, empty), x));

  TransformationPlan twice{s, s, {MutationStep{1}, MutationStep{1}}};
  twice.validate();
  CHECK(twice.mutation_count() == 2);
  CHECK(same_values(run_plan(x, twice), x));

  // mu_1 then the transposition back onto the source seed.
  TransformationPlan swap{s, s, {MutationStep{1}, IsoStep{{{1, 2}, {2, 1}}, s}}};
  swap.validate();
  auto out = run_plan(x, swap);
  CHECK(out.at(2) == var(1).inverse());

  TransformationPlan bad{s, s, {IsoStep{{{1, 2}, {2, 1}}, s}}};
  CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::SeedMismatch);
  CHECK(kind_of([&] { run_plan(x, bad); }) == ErrorKind::SeedMismatch);
  Seed other({1, 2}, {});
  CHECK(kind_of([&] { run_plan(ClusterAssignment::symbolic(other, CoordKind::X), empty); }) ==
        ErrorKind::SeedMismatch);
  CHECK(swap.to_string() == "[mu_1, iso{1->2,2->1}]");
}

TEST_CASE("cluster laws on the S3 corpus and random seeds") {
  auto seeds = testing::seed_corpus(3);
  CHECK(seeds.size() >= 36);
  for (const auto& s : random_seeds(100, 11)) seeds.push_back(s);
  for (const auto& s : seeds) {
    auto a = ClusterAssignment::symbolic(s, CoordKind::A);
    auto x = ClusterAssignment::symbolic(s, CoordKind::X);
    for (int k : s.mutable_vertices()) {
      CAPTURE(s.to_string());
      CAPTURE(k);
      auto sk = mutate_seed(s, k);
      for (int i : s.vertices())
        for (int j : s.vertices()) CHECK(sk.eps(i, j) == -sk.eps(j, i));
      CHECK(mutate_seed(sk, k) == s);
      CHECK(same_values(mutate_A(mutate_A(a, k), k), a));
      CHECK(same_values(mutate_X(mutate_X(x, k), k), x));
      CHECK(same_values(p_map(mutate_A(a, k)), mutate_X(p_map(a), k)));
      CHECK(same_values(i_X(mutate_X(x, k)), mutate_X(i_X(x), k)));
    }
  }
}

TEST_CASE("X-mutation sequences stay subtraction-free") {
  std::mt19937_64 rng(23);
  for (const auto& s : random_seeds(60, 29, 1)) {
    auto mut = s.mutable_vertices();
    auto x = ClusterAssignment::symbolic(s, CoordKind::X);
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < len; ++t) {
      x = mutate_X(x, mut[rng() % mut.size()]);
      for (const auto& [v, value] : x.values) {
        CAPTURE(value.to_string());
        CHECK(subtraction_free(value));
      }
    }
  }
}

TEST_CASE("A-mutation sequences on the S3 corpus are Laurent") {
  std::mt19937_64 rng(31);
  for (const auto& s : testing::seed_corpus(3)) {
    auto mut = s.mutable_vertices();
    if (mut.empty()) continue;
    auto a = ClusterAssignment::symbolic(s, CoordKind::A);
    for (int t = 0; t < 4; ++t) {
      a = mutate_A(a, mut[rng() % mut.size()]);
      for (const auto& [v, value] : a.values) CHECK(value.is_laurent());
    }
  }
}
