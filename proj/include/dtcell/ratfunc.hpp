#pragma once

// Rational functions num/den over Laurent polynomials.
//
// The normal form keeps den free of monomial factors, with coprime integer
// contents and a positive leading coefficient. Common polynomial factors are
// removed only when one side divides the other exactly; no multivariate GCD is
// attempted, so equality is decided by cross-multiplication.

#include <map>
#include <string>

#include "dtcell/laurent.hpp"

namespace dtcell::exact {

class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c);  // NOLINT(google-explicit-constructor)
  RatFunc(const Integer& c);  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c);  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly p);  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num, LaurentPoly den);
  static RatFunc variable(VarId v);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_laurent_monomial() const { return num_.is_monomial() && den_.is_constant(); }
  // Constant value if the function is constant.
  Rational constant_value() const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  // Throws NonGenericPoint when the denominator vanishes at the point.
  Rational evaluate(const std::map<VarId, Rational>& point) const;
  // Replaces variables present in the map; others are kept.
  RatFunc substitute(const std::map<VarId, RatFunc>& values) const;

  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_{1};
};

}  // namespace dtcell::exact
