#include "dtcell/tropical.hpp"

#include <climits>

#include "dtcell/error.hpp"

namespace dtcell::exact {

namespace {

long trop_poly(const LaurentPoly& p, const TropicalPoint& pt) {
  long best = LONG_MIN;
  for (const auto& t : p.terms()) {
    long s = 0;
    for (const auto& [v, e] : t.mono.factors()) s += static_cast<long>(e) * pt.at(v);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

long trop_eval(const RatFunc& f, const TropicalPoint& p) {
  if (f.is_zero()) fail(ErrorKind::ZeroFunction, "tropicalization of zero");
  return trop_poly(f.num(), p) - trop_poly(f.den(), p);
}

int top_degree(const RatFunc& f, VarId v) {
  if (f.is_zero()) fail(ErrorKind::ZeroFunction, "top degree of zero");
  return f.num().max_degree(v) - f.den().max_degree(v);
}

}  // namespace dtcell::exact
