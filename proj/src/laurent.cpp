#include "dtcell/laurent.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <unordered_map>

#include "dtcell/error.hpp"

namespace dtcell::exact {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(VarId v, int exponent) {
  Monomial m;
  if (exponent != 0) m.f_.push_back({v, exponent});
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (!m.f_.empty() && m.f_.back().first == v) m.f_.back().second += e;
    else m.f_.push_back({v, e});
  }
  std::erase_if(m.f_, [](const Factor& f) { return f.second == 0; });
  return m;
}

Monomial Monomial::from_sorted(std::vector<Factor> factors) {
  Monomial m;
  m.f_ = std::move(factors);
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), Factor{v, INT_MIN});
  return (it != f_.end() && it->first == v) ? it->second : 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : f_) d += f.second;
  return d;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& f : m.f_) f.second = -f.second;
  return m;
}

Monomial Monomial::pow(int e) const {
  if (e == 0) return {};
  Monomial m = *this;
  for (auto& f : m.f_) f.second *= e;
  return m;
}

namespace {

template <class Op>
Monomial merge(const std::vector<Monomial::Factor>& a, const std::vector<Monomial::Factor>& b, Op op) {
  std::vector<Monomial::Factor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    VarId v;
    int ea = 0, eb = 0;
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      v = a[i].first;
      ea = a[i++].second;
    } else if (i == a.size() || b[j].first < a[i].first) {
      v = b[j].first;
      eb = b[j++].second;
    } else {
      v = a[i].first;
      ea = a[i++].second;
      eb = b[j++].second;
    }
    int e = op(ea, eb);
    if (e != 0) out.push_back({v, e});
  }
  return Monomial::from_sorted(std::move(out));
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.f_.empty()) return b;
  if (b.f_.empty()) return a;
  return merge(a.f_, b.f_, [](int x, int y) { return x + y; });
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  return merge(a.f_, b.f_, [](int x, int y) { return std::min(x, y); });
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  return merge(a.f_, b.f_, [](int x, int y) { return std::max(x, y); });
}

bool Monomial::divisible_by(const Monomial& other) const {
  auto q = *this / other;
  return std::all_of(q.f_.begin(), q.f_.end(), [](const Factor& f) { return f.second >= 0; });
}

int lex_compare(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    int ea = 0, eb = 0;
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      ea = a.f_[i++].second;
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      eb = b.f_[j++].second;
    } else {
      ea = a.f_[i++].second;
      eb = b.f_[j++].second;
    }
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : f_) {
    if (!s.empty()) s += "*";
    s += VariableRegistry::instance().name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

LaurentPoly LaurentPoly::variable(VarId v) { return monomial(Monomial::var(v)); }

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::optional<Integer> LaurentPoly::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (is_constant()) return terms_[0].coeff;
  return std::nullopt;
}

int LaurentPoly::max_degree(VarId v) const {
  if (terms_.empty()) fail(ErrorKind::ZeroFunction, "degree of the zero polynomial");
  int d = INT_MIN;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

int LaurentPoly::min_degree(VarId v) const {
  if (terms_.empty()) fail(ErrorKind::ZeroFunction, "degree of the zero polynomial");
  int d = INT_MAX;
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
  return d;
}

Monomial LaurentPoly::min_monomial() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (std::size_t k = 1; k < terms_.size(); ++k) m = Monomial::gcd(m, terms_[k].mono);
  return m;
}

Monomial LaurentPoly::max_monomial() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (std::size_t k = 1; k < terms_.size(); ++k) m = Monomial::lcm(m, terms_[k].mono);
  return m;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::set<VarId> LaurentPoly::variables() const {
  std::set<VarId> vs;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vs.insert(f.first);
  return vs;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : lex_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Integer s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) out.push_back({std::move(terms_[i].mono), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly p = a.times(b.terms_[0].mono);
    return b.terms_[0].coeff == 1 ? p : p.times(b.terms_[0].coeff);
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return LaurentPoly::from_unsorted(std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].coeff != b.terms_[k].coeff || !(a.terms_[k].mono == b.terms_[k].mono)) return false;
  return true;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
  if (m.is_one()) return *this;
  LaurentPoly p = *this;
  // Multiplying by a monomial preserves the lex order.
  for (auto& t : p.terms_) t.mono = t.mono * m;
  return p;
}

LaurentPoly LaurentPoly::times(const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

LaurentPoly LaurentPoly::divide_exact(const Integer& c) const {
  if (c == 0) fail(ErrorKind::ZeroFunction, "division by zero constant");
  LaurentPoly p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return p;
}

std::optional<LaurentPoly> LaurentPoly::exact_quotient(const LaurentPoly& d) const {
  if (d.is_zero()) fail(ErrorKind::ZeroFunction, "division by the zero polynomial");
  if (is_zero()) return LaurentPoly();
  if (d.is_monomial()) {
    const Integer& c = d.terms_[0].coeff;
    for (const auto& t : terms_)
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    return divide_exact(c).times(d.terms_[0].mono.inverse());
  }
  // Reduce to honest polynomials without monomial factors; in the Laurent ring
  // divisibility is then equivalent to polynomial divisibility.
  const Monomial ma = min_monomial(), md = d.min_monomial();
  LaurentPoly a = times(ma.inverse());
  LaurentPoly b = d.times(md.inverse());
  // Leading and trailing terms of a product are the products of the leading
  // and trailing terms.
  if (!a.terms_.front().mono.divisible_by(b.terms_.front().mono) ||
      !a.terms_.back().mono.divisible_by(b.terms_.back().mono) ||
      !mpz_divisible_p(a.terms_.front().coeff.get_mpz_t(), b.terms_.front().coeff.get_mpz_t()) ||
      !mpz_divisible_p(a.terms_.back().coeff.get_mpz_t(), b.terms_.back().coeff.get_mpz_t()))
    return std::nullopt;
  const Monomial bound = a.max_monomial() / b.max_monomial();
  for (const auto& f : bound.factors())
    if (f.second < 0) return std::nullopt;

  std::vector<Term> quotient;
  LaurentPoly r = std::move(a);
  const Term& lb = b.terms_.front();
  while (!r.is_zero()) {
    const Term& lr = r.terms_.front();
    if (!lr.mono.divisible_by(lb.mono) || !mpz_divisible_p(lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t()))
      return std::nullopt;
    Term q{lr.mono / lb.mono, Integer()};
    mpz_divexact(q.coeff.get_mpz_t(), lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
    r -= b.times(q.mono).times(q.coeff);
    quotient.push_back(std::move(q));
  }
  return from_unsorted(std::move(quotient)).times(ma / md);
}

Rational LaurentPoly::evaluate(const std::map<VarId, Rational>& point) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (const auto& [var, e] : t.mono.factors()) {
      auto it = point.find(var);
      if (it == point.end()) fail(ErrorKind::InvalidArgument, "no value for variable " + VariableRegistry::instance().name(var));
      if (it->second == 0 && e < 0) fail(ErrorKind::NonGenericPoint, "negative power of a zero value");
      Rational x = e > 0 ? it->second : Rational(1) / it->second;
      for (int k = 0; k < std::abs(e); ++k) v *= x;
    }
    total += v;
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    Integer c = t.coeff;
    if (k) {
      s += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0 && !t.mono.is_one() && c == -1) {
      s += "-";
      c = 1;
    }
    if (t.mono.is_one()) s += c.get_str();
    else if (c == 1) s += t.mono.to_string();
    else s += c.get_str() + "*" + t.mono.to_string();
  }
  return s;
}

// -------------------------------------------------------- VariableRegistry

namespace {

constexpr VarId kFreshBase = 1u << 20;

struct RegistryState {
  std::mutex mu;
  std::unordered_map<VarId, std::string> names;
  VarId next = kFreshBase;
};

RegistryState& registry_state() {
  static RegistryState s;
  return s;
}

}  // namespace

VariableRegistry& VariableRegistry::instance() {
  static VariableRegistry r;
  return r;
}

void VariableRegistry::set_name(VarId v, std::string name) {
  auto& s = registry_state();
  std::lock_guard lock(s.mu);
  s.names[v] = std::move(name);
}

VarId VariableRegistry::fresh(std::string name) {
  auto& s = registry_state();
  std::lock_guard lock(s.mu);
  VarId v = s.next++;
  s.names[v] = std::move(name);
  return v;
}

std::string VariableRegistry::name(VarId v) const {
  auto& s = registry_state();
  std::lock_guard lock(s.mu);
  auto it = s.names.find(v);
  if (it != s.names.end()) return it->second;
  return "X" + std::to_string(v);
}

}  // namespace dtcell::exact
