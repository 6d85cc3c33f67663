#pragma once

// Max-plus tropicalization of subtraction-free rational functions.

#include <map>

#include "dtcell/ratfunc.hpp"

namespace dtcell::exact {

// Integer point; variables missing from the map sit at 0.
struct TropicalPoint {
  std::map<VarId, long> coords;
  long at(VarId v) const {
    auto it = coords.find(v);
    return it == coords.end() ? 0 : it->second;
  }
};

// max over numerator monomials minus max over denominator monomials.
long trop_eval(const RatFunc& f, const TropicalPoint& p);
// Top degree in one variable: max exponent in num minus max exponent in den.
int top_degree(const RatFunc& f, VarId v);

}  // namespace dtcell::exact
