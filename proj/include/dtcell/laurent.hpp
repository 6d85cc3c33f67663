#pragma once

// Laurent monomials and Laurent polynomials with arbitrary-precision integer
// coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dtcell::exact {

using Integer = mpz_class;
using Rational = mpq_class;
using VarId = std::uint32_t;

class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;
  static Monomial var(VarId v, int exponent = 1);
  // Factors may be unsorted or repeated; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);
  // Factors must already be sorted by variable with nonzero exponents.
  static Monomial from_sorted(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return f_; }
  int exponent(VarId v) const;
  bool is_one() const { return f_.empty(); }
  int total_degree() const;

  Monomial inverse() const;
  Monomial pow(int e) const;
  // Componentwise min / max of exponents.
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  // True when every exponent of *this is at least the matching one of other.
  bool divisible_by(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic order on exponent vectors, smaller variable ids first.
  friend int lex_compare(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b) { return lex_compare(a, b) < 0; }

  std::string to_string() const;

 private:
  std::vector<Factor> f_;
};

class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    Integer coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly variable(VarId v);
  static LaurentPoly monomial(const Monomial& m, const Integer& c = 1);

  // Terms sorted by strictly decreasing monomial in lex order; no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<Integer> constant_value() const;
  const Term& leading_term() const { return terms_.front(); }

  int max_degree(VarId v) const;
  int min_degree(VarId v) const;
  Monomial min_monomial() const;
  Monomial max_monomial() const;
  Integer content() const;
  std::set<VarId> variables() const;
  bool has_nonnegative_coefficients() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned e) const;
  LaurentPoly times(const Monomial& m) const;
  LaurentPoly times(const Integer& c) const;
  // Exact division of every coefficient.
  LaurentPoly divide_exact(const Integer& c) const;
  // Quotient q with *this == q * d when one exists in the Laurent ring.
  std::optional<LaurentPoly> exact_quotient(const LaurentPoly& d) const;

  Rational evaluate(const std::map<VarId, Rational>& point) const;
  std::string to_string() const;

 private:
  static LaurentPoly from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

// Names used when printing variables; ids not registered print as X<id>.
class VariableRegistry {
 public:
  static VariableRegistry& instance();
  void set_name(VarId v, std::string name);
  // Issues a fresh id above every id used for faces.
  VarId fresh(std::string name);
  std::string name(VarId v) const;

 private:
  VariableRegistry() = default;
};

}  // namespace dtcell::exact
