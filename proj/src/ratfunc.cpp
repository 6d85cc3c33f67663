#include "dtcell/ratfunc.hpp"

#include "dtcell/error.hpp"

namespace dtcell::exact {

RatFunc::RatFunc(long c) : num_(c) {}
RatFunc::RatFunc(const Integer& c) : num_(c) {}
RatFunc::RatFunc(const Rational& c) : num_(c.get_num()), den_(c.get_den()) {}
RatFunc::RatFunc(LaurentPoly p) : num_(std::move(p)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFunc RatFunc::variable(VarId v) { return RatFunc(LaurentPoly::variable(v)); }

void RatFunc::normalize() {
  if (den_.is_zero()) fail(ErrorKind::ZeroFunction, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const Monomial m = den_.min_monomial();
  if (!m.is_one()) {
    const Monomial inv = m.inverse();
    den_ = den_.times(inv);
    num_ = num_.times(inv);
  }
  if (!den_.is_constant()) {
    if (auto q = num_.exact_quotient(den_)) {
      num_ = std::move(*q);
      den_ = LaurentPoly(1);
    } else if (!num_.is_monomial()) {
      const Monomial mn = num_.min_monomial();
      LaurentPoly core = num_.times(mn.inverse());
      if (auto q2 = den_.exact_quotient(core)) {
        den_ = std::move(*q2);
        num_ = LaurentPoly::monomial(mn);
      }
    }
  }
  Integer g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.content().get_mpz_t());
  if (den_.leading_term().coeff < 0) g = -g;
  if (g != 1) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InvalidArgument, "not a constant: " + to_string());
  Rational q(*num_.constant_value(), *den_.constant_value());
  q.canonicalize();
  return q;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorKind::ZeroFunction, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  LaurentPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_constant()) {
    if (auto q = n1.exact_quotient(d2)) {
      n1 = std::move(*q);
      d2 = LaurentPoly(1);
    }
  }
  if (!d1.is_constant()) {
    if (auto q = n2.exact_quotient(d1)) {
      n2 = std::move(*q);
      d1 = LaurentPoly(1);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  if (a.is_laurent() && b.is_laurent()) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RatFunc::evaluate(const std::map<VarId, Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) fail(ErrorKind::NonGenericPoint, "denominator vanishes at the point");
  return num_.evaluate(point) / d;
}

namespace {

RatFunc substitute_poly(const LaurentPoly& p, const std::map<VarId, RatFunc>& values) {
  RatFunc total;
  for (const auto& t : p.terms()) {
    RatFunc term(t.coeff);
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = values.find(v);
      if (it == values.end()) term *= RatFunc(LaurentPoly::monomial(Monomial::var(v, e)));
      else term *= it->second.pow(e);
    }
    total += term;
  }
  return total;
}

}  // namespace

RatFunc RatFunc::substitute(const std::map<VarId, RatFunc>& values) const {
  return substitute_poly(num_, values) / substitute_poly(den_, values);
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && *den_.constant_value() == 1) return num_.to_string();
  auto wrap = [](const LaurentPoly& p) {
    return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace dtcell::exact
