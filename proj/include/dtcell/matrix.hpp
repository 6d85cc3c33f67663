#pragma once

// Dense matrices of rational functions and the GL_n constructions built on
// them: Chevalley generators, Weyl group lifts, minors, Gaussian
// decomposition and the involution g -> w0 (g^-1)^t w0^-1.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dtcell/ratfunc.hpp"
#include "dtcell/weyl.hpp"

namespace dtcell::exact {

class RFMatrix {
 public:
  RFMatrix() = default;
  RFMatrix(int rows, int cols);
  static RFMatrix identity(int n);
  // Rows given as nested initializer data, mostly for tests.
  static RFMatrix from_rows(const std::vector<std::vector<RatFunc>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // Zero-based indices.
  RatFunc& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const RatFunc& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  RFMatrix transpose() const;
  // One-based row and column sets, taken in the given order.
  RFMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;
  RatFunc determinant() const;
  RFMatrix inverse() const;
  RFMatrix specialize(const std::map<VarId, Rational>& point) const;
  RFMatrix substitute(const std::map<VarId, RatFunc>& values) const;

  bool is_lower_unipotent() const;
  bool is_upper_unipotent() const;
  bool is_diagonal() const;
  bool all_laurent() const;

  friend RFMatrix operator*(const RFMatrix& a, const RFMatrix& b);
  friend bool operator==(const RFMatrix& a, const RFMatrix& b);

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<RatFunc> a_;
};

// Delta^{I,J}: rows I, columns J, both one-based and ascending. The empty
// minor is 1 and minors with |I| != |J| are 0.
RatFunc minor(const RFMatrix& x, std::span<const int> rows, std::span<const int> cols);

enum class GenKind { Upper, Lower, Cartan };

// Upper: I + E_{i,i+1}; Lower: I + E_{i+1,i}; Cartan: diag with value in the
// first i diagonal entries and 1 elsewhere (i = 0..n).
RFMatrix generator(GenKind kind, int i, int n, const RatFunc& value = RatFunc(1));

// Lift of s_i: e_i^-1 e_{-i} e_i^-1.
RFMatrix lift_simple(int i, int n);
// Product of lifted simple reflections along a reduced word.
RFMatrix lift_word(int n, std::span<const int> letters);
RFMatrix lift_weyl(const weyl::Permutation& w);

RFMatrix star(const RFMatrix& g);

struct GaussFactors {
  RFMatrix lower;     // lower unipotent
  RFMatrix diagonal;  // invertible diagonal
  RFMatrix upper;     // upper unipotent
};

// x = lower * diagonal * upper; throws NotGaussianDecomposable when a leading
// principal minor vanishes.
GaussFactors gauss_decompose(const RFMatrix& x);
// Inverse of a unipotent triangular matrix by substitution.
RFMatrix unipotent_inverse(const RFMatrix& t);

}  // namespace dtcell::exact
