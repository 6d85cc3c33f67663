#include <doctest.h>

#include <random>

#include "dtcell/error.hpp"
#include "dtcell/matrix.hpp"
#include "dtcell/tropical.hpp"

using namespace dtcell;
using namespace dtcell::exact;

namespace {

RatFunc X(VarId v) { return RatFunc::variable(v); }
LaurentPoly P(VarId v) { return LaurentPoly::variable(v); }

LaurentPoly random_poly(std::mt19937_64& rng, int vars, int terms, bool laurent, bool positive = false) {
  std::uniform_int_distribution<int> coeff(positive ? 1 : -5, 5);
  std::uniform_int_distribution<int> expo(laurent ? -2 : 0, 3);
  std::uniform_int_distribution<int> var(0, vars - 1);
  LaurentPoly p;
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) continue;
    std::vector<Monomial::Factor> f;
    for (int k = 0; k < 2; ++k) f.push_back({static_cast<VarId>(var(rng)), expo(rng)});
    p += LaurentPoly::monomial(Monomial::from_factors(f), c);
  }
  return p;
}

// Leibniz formula, used as an oracle for the determinant code paths.
RatFunc leibniz(const RFMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  RatFunc total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    RatFunc term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

RFMatrix symbolic(int n, VarId base = 100) {
  RFMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = X(base + static_cast<VarId>(i * n + j));
  return m;
}

std::vector<int> with(std::vector<int> s, std::initializer_list<int> extra) {
  s.insert(s.end(), extra);
  std::sort(s.begin(), s.end());
  return s;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("monomials") {
  auto m = Monomial::from_factors({{2, 1}, {1, 3}, {2, -1}});
  CHECK(m == Monomial::var(1, 3));
  CHECK((Monomial::var(1) * Monomial::var(1, -1)).is_one());
  CHECK(Monomial::gcd(Monomial::var(1, 2), Monomial::var(1, -1) * Monomial::var(2)) == Monomial::var(1, -1));
  CHECK(lex_compare(Monomial::var(1), Monomial::var(2, 5)) > 0);
}

TEST_CASE("Laurent polynomial arithmetic") {
  auto p = P(1) + P(2);
  CHECK((p * p).to_string() == "X1^2 + 2*X1*X2 + X2^2");
  CHECK((p - p).is_zero());
  CHECK(LaurentPoly::monomial(Monomial::var(1, -1)) * P(1) == LaurentPoly(1));
  CHECK(p.pow(3).size() == 4);
  auto q = (P(1) + 1) * (P(2) - 2) * LaurentPoly::monomial(Monomial::var(3, -2));
  auto d = q.exact_quotient(P(2) - 2);
  REQUIRE(d.has_value());
  CHECK(*d == (P(1) + 1) * LaurentPoly::monomial(Monomial::var(3, -2)));
  CHECK_FALSE(q.exact_quotient(P(2) + 2).has_value());
  CHECK_FALSE((P(1) + 1).exact_quotient(LaurentPoly(2)).has_value());
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    auto f = random_poly(rng, 3, 4, true);
    auto g = random_poly(rng, 3, 4, true);
    auto h = random_poly(rng, 3, 3, true);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    if (!g.is_zero()) {
      auto q = (f * g).exact_quotient(g);
      REQUIRE(q.has_value());
      CHECK(*q == f);
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  std::map<VarId, Rational> pt{{0, Rational(3, 7)}, {1, Rational(-5, 2)}, {2, Rational(11, 13)}};
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(rng, 3, 4, true);
    auto g = random_poly(rng, 3, 4, true);
    CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
  }
}

TEST_CASE("rational functions normalize and compare") {
  auto a = X(1), b = X(2);
  CHECK((a / a) == RatFunc(1));
  CHECK(((a + b) / (a + b)).is_constant());
  CHECK((a * a - b * b) / (a - b) == a + b);
  CHECK(((a * a - b * b) / (a - b)).is_laurent());
  auto f = (a + 1) / (b + 1);
  CHECK(f.inverse() == (b + 1) / (a + 1));
  CHECK(f * f.inverse() == RatFunc(1));
  CHECK(RatFunc(LaurentPoly(2) * P(1), LaurentPoly(4) * P(1) * P(2)) == RatFunc(1) / (RatFunc(2) * b));
  CHECK(RatFunc(LaurentPoly(1), -(P(1) + 1)).den().leading_term().coeff > 0);
  CHECK(kind_of([] { RatFunc(LaurentPoly(1), LaurentPoly()); }) == ErrorKind::ZeroFunction);
  CHECK(kind_of([] { RatFunc().inverse(); }) == ErrorKind::ZeroFunction);
}

TEST_CASE("rational function equality respects arithmetic") {
  std::mt19937_64 rng(19);
  std::map<VarId, Rational> pt{{0, Rational(2, 3)}, {1, Rational(7, 5)}, {2, Rational(-3, 11)}};
  for (int trial = 0; trial < 200; ++trial) {
    auto n1 = random_poly(rng, 3, 3, true), d1 = random_poly(rng, 3, 3, true);
    auto n2 = random_poly(rng, 3, 3, true), d2 = random_poly(rng, 3, 3, true);
    if (d1.is_zero() || d2.is_zero() || d1.evaluate(pt) == 0 || d2.evaluate(pt) == 0) continue;
    RatFunc f(n1, d1), g(n2, d2);
    RatFunc s = f + g, p = f * g;
    CHECK(s.evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
    CHECK(p.evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    CHECK(s - g == f);
    if (!g.is_zero()) CHECK(p / g == f);
    CHECK(f.num() * d1 == n1 * f.den());
  }
}

TEST_CASE("generators") {
  auto e1 = generator(GenKind::Upper, 1, 2);
  CHECK(e1 == RFMatrix::from_rows({{1, 1}, {0, 1}}));
  CHECK(generator(GenKind::Lower, 1, 2) == RFMatrix::from_rows({{1, 0}, {1, 1}}));
  CHECK(generator(GenKind::Cartan, 0, 3, X(5)) == RFMatrix::identity(3));
  CHECK(generator(GenKind::Cartan, 1, 2, X(5)) == RFMatrix::from_rows({{X(5), 0}, {0, 1}}));
  CHECK(generator(GenKind::Cartan, 2, 2, X(5)) == RFMatrix::from_rows({{X(5), 0}, {0, X(5)}}));
  CHECK(kind_of([] { generator(GenKind::Upper, 2, 2); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { generator(GenKind::Cartan, 4, 3, RatFunc(2)); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { generator(GenKind::Cartan, 1, 3, RatFunc(0)); }) == ErrorKind::ZeroFaceValue);
}

TEST_CASE("Weyl group lifts") {
  CHECK(lift_simple(1, 2) == RFMatrix::from_rows({{0, -1}, {1, 0}}));
  CHECK(lift_weyl(weyl::Permutation::identity(3)) == RFMatrix::identity(3));
  std::vector<int> w121{1, 2, 1}, w212{2, 1, 2};
  CHECK(lift_word(3, w121) == lift_word(3, w212));
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : weyl::all_permutations(n)) {
      auto m = lift_weyl(w);
      for (int i = 0; i < n; ++i) {
        int nonzero = 0;
        for (int j = 0; j < n; ++j) {
          auto c = m(i, j);
          if (!c.is_zero()) {
            ++nonzero;
            CHECK((c == RatFunc(1) || c == RatFunc(-1)));
          }
        }
        CHECK(nonzero == 1);
      }
    }
}

TEST_CASE("the star involution") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    RFMatrix g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = RatFunc(d(rng));
    if (g.determinant().is_zero()) continue;
    CHECK(star(star(g)) == g);
  }
  auto up = RFMatrix::from_rows({{X(1), X(2), X(3)}, {0, X(4), X(5)}, {0, 0, X(6)}});
  auto s = star(up);
  CHECK(s(1, 0).is_zero());
  CHECK(s(2, 0).is_zero());
  CHECK(s(2, 1).is_zero());
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) CHECK(star(lift_simple(i, n)) == lift_simple(n - i, n));
  CHECK(kind_of([] { star(RFMatrix::from_rows({{1, 1}, {1, 1}})); }) == ErrorKind::SingularMatrix);
}

TEST_CASE("minors") {
  std::vector<int> r12{1, 2}, none, r1{1};
  CHECK(minor(RFMatrix::identity(3), r12, r12) == RatFunc(1));
  CHECK(minor(symbolic(3), none, none) == RatFunc(1));
  CHECK(minor(symbolic(3), r1, r12).is_zero());
  for (int n = 1; n <= 7; ++n) {
    auto m = symbolic(std::min(n, 4));
    if (n <= 4) CHECK(m.determinant() == leibniz(m));
  }
  // Elimination path above size 6 against Leibniz on a sparse integer matrix.
  RFMatrix big(7, 7);
  for (int i = 0; i < 7; ++i) {
    big(i, i) = RatFunc(i + 2);
    big(i, (i + 1) % 7) = X(1);
    big(i, (i + 3) % 7) = RatFunc(-1);
  }
  CHECK(big.determinant() == leibniz(big));
}

TEST_CASE("three-term minor identities on symbolic matrices") {
  // Exchange identity for i < k, j < l on top of (I, J).
  for (int n = 2; n <= 4; ++n) {
    auto m = symbolic(n);
    int checked = 0;
    for (unsigned mi = 0; mi < (1u << n); ++mi)
      for (unsigned mj = 0; mj < (1u << n); ++mj) {
        std::vector<int> I, J, freeI, freeJ;
        for (int t = 1; t <= n; ++t) {
          ((mi >> (t - 1)) & 1u ? I : freeI).push_back(t);
          ((mj >> (t - 1)) & 1u ? J : freeJ).push_back(t);
        }
        if (I.size() != J.size() || freeI.size() < 2 || freeJ.size() < 2) continue;
        for (std::size_t a = 0; a < freeI.size(); ++a)
          for (std::size_t b = a + 1; b < freeI.size(); ++b)
            for (std::size_t c = 0; c < freeJ.size(); ++c)
              for (std::size_t e = c + 1; e < freeJ.size(); ++e) {
                int i = freeI[a], k = freeI[b], j = freeJ[c], l = freeJ[e];
                auto lhs = minor(m, with(I, {i}), with(J, {j})) * minor(m, with(I, {k}), with(J, {l}));
                auto rhs = minor(m, with(I, {i}), with(J, {l})) * minor(m, with(I, {k}), with(J, {j})) +
                           minor(m, I, J) * minor(m, with(I, {i, k}), with(J, {j, l}));
                CHECK(lhs == rhs);
                ++checked;
              }
      }
    CHECK(checked > 0);
  }
  // Column three-term relation for j < k < l with |I| = |J| + 1.
  for (int n = 3; n <= 4; ++n) {
    auto m = symbolic(n);
    for (unsigned mi = 0; mi < (1u << n); ++mi)
      for (unsigned mj = 0; mj < (1u << n); ++mj) {
        std::vector<int> I, J, freeI, freeJ;
        for (int t = 1; t <= n; ++t) {
          ((mi >> (t - 1)) & 1u ? I : freeI).push_back(t);
          ((mj >> (t - 1)) & 1u ? J : freeJ).push_back(t);
        }
        if (I.size() != J.size() + 1 || freeI.empty() || freeJ.size() < 3) continue;
        for (int i : freeI)
          for (std::size_t a = 0; a < freeJ.size(); ++a)
            for (std::size_t b = a + 1; b < freeJ.size(); ++b)
              for (std::size_t c = b + 1; c < freeJ.size(); ++c) {
                int j = freeJ[a], k = freeJ[b], l = freeJ[c];
                auto lhs = minor(m, I, with(J, {k})) * minor(m, with(I, {i}), with(J, {j, l}));
                auto rhs = minor(m, I, with(J, {j})) * minor(m, with(I, {i}), with(J, {k, l})) +
                           minor(m, I, with(J, {l})) * minor(m, with(I, {i}), with(J, {j, k}));
                CHECK(lhs == rhs);
              }
      }
  }
}

TEST_CASE("the braid identity of Cartan and unipotent generators") {
  // e_i h^i(X) e_{i+1} e_i equals the mutated factorization, here in GL3.
  auto x = X(1);
  auto c = [](int i, const RatFunc& v) { return generator(GenKind::Cartan, i, 3, v); };
  auto e = [](int i) { return generator(GenKind::Upper, i, 3); };
  auto lhs = e(1) * c(1, x) * e(2) * e(1);
  auto inv = (RatFunc(1) + x.inverse()).inverse();
  auto rhs = c(2, inv) * c(1, RatFunc(1) + x) * e(2) * e(1) * c(2, x.inverse()) * e(2) * c(1, inv) *
             c(2, RatFunc(1) + x);
  CHECK(lhs == rhs);
}

TEST_CASE("Gaussian decomposition") {
  auto id = gauss_decompose(RFMatrix::identity(3));
  CHECK(id.lower == RFMatrix::identity(3));
  CHECK(id.diagonal == RFMatrix::identity(3));
  CHECK(id.upper == RFMatrix::identity(3));

  auto a = X(1), b = X(2), c = X(3), d = X(4);
  auto m = RFMatrix::from_rows({{a, b}, {c, d}});
  auto f = gauss_decompose(m);
  CHECK(f.lower == RFMatrix::from_rows({{1, 0}, {c / a, 1}}));
  CHECK(f.diagonal == RFMatrix::from_rows({{a, 0}, {0, (a * d - b * c) / a}}));
  CHECK(f.upper == RFMatrix::from_rows({{1, b / a}, {0, 1}}));

  for (int n = 2; n <= 4; ++n) {
    auto s = symbolic(n);
    auto g = gauss_decompose(s);
    CHECK(g.lower.is_lower_unipotent());
    CHECK(g.upper.is_upper_unipotent());
    CHECK(g.diagonal.is_diagonal());
    auto prod = g.lower * g.diagonal * g.upper;
    CHECK(prod == s);
    auto again = gauss_decompose(prod);
    CHECK(again.lower == g.lower);
    CHECK(again.upper == g.upper);
    CHECK(unipotent_inverse(g.upper) * g.upper == RFMatrix::identity(n));
    CHECK(g.lower * unipotent_inverse(g.lower) == RFMatrix::identity(n));
  }
  CHECK(kind_of([] { gauss_decompose(RFMatrix::from_rows({{0, 1}, {1, 0}})); }) ==
        ErrorKind::NotGaussianDecomposable);
}

TEST_CASE("tropical evaluation") {
  TropicalPoint at1{{{1, 1}}};
  CHECK(trop_eval(X(1), at1) == 1);
  CHECK(trop_eval(RatFunc(1) + X(1), TropicalPoint{{{1, -3}}}) == 0);
  CHECK(trop_eval(X(1) / X(2), TropicalPoint{{{2, 1}}}) == -1);
  CHECK(top_degree(X(1).inverse(), 1) == -1);
  CHECK(top_degree(X(2) * (RatFunc(1) + X(1)), 1) == 1);
  CHECK(kind_of([] { trop_eval(RatFunc(), TropicalPoint{}); }) == ErrorKind::ZeroFunction);
  CHECK(kind_of([] { top_degree(RatFunc(), 1); }) == ErrorKind::ZeroFunction);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto n = random_poly(rng, 3, 4, true, true), dd = random_poly(rng, 3, 4, true, true);
    if (n.is_zero() || dd.is_zero()) continue;
    RatFunc f(n, dd);
    for (VarId v = 0; v < 3; ++v) CHECK(top_degree(f, v) == trop_eval(f, TropicalPoint{{{v, 1}}}));
  }
  for (int trial = 0; trial < 200; ++trial) {
    auto f = RatFunc(random_poly(rng, 3, 3, true, true), random_poly(rng, 3, 2, true, true) + 1);
    auto g = RatFunc(random_poly(rng, 3, 3, true, true) + 1, random_poly(rng, 3, 3, true, true) + 1);
    if (f.is_zero()) continue;
    TropicalPoint p{{{0, trial % 5 - 2}, {1, trial % 3 - 1}, {2, 2 - trial % 4}}};
    CHECK(trop_eval(f * g, p) == trop_eval(f, p) + trop_eval(g, p));
  }
}
