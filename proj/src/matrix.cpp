#include "dtcell/matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "dtcell/error.hpp"

namespace dtcell::exact {

RFMatrix::RFMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

RFMatrix RFMatrix::identity(int n) {
  RFMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = RatFunc(1);
  return m;
}

RFMatrix RFMatrix::from_rows(const std::vector<std::vector<RatFunc>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  RFMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) fail(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RFMatrix RFMatrix::transpose() const {
  RFMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RFMatrix RFMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
  RFMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] < 1 || rows[i] > rows_ || cols[j] < 1 || cols[j] > cols_)
        fail(ErrorKind::IndexOutOfRange, "minor index outside the matrix");
      s(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i] - 1, cols[j] - 1);
    }
  return s;
}

namespace {

// Laplace expansion row by row, memoized on the set of used columns.
RatFunc laplace_determinant(const RFMatrix& m) {
  const int k = m.rows();
  if (k == 0) return RatFunc(1);
  std::vector<RatFunc> dp(std::size_t{1} << k);
  std::vector<bool> live(dp.size(), false);
  dp[0] = RatFunc(1);
  live[0] = true;
  for (unsigned mask = 0; mask < dp.size(); ++mask) {
    if (!live[mask] || dp[mask].is_zero()) continue;
    const int r = std::popcount(mask);
    if (r == k) continue;
    for (int c = 0; c < k; ++c) {
      if (mask & (1u << c)) continue;
      const RatFunc& entry = m(r, c);
      if (entry.is_zero()) continue;
      const int above = std::popcount(mask >> (c + 1));
      RatFunc term = dp[mask] * entry;
      const unsigned next = mask | (1u << c);
      if (above % 2) dp[next] -= term;
      else dp[next] += term;
      live[next] = true;
    }
  }
  return dp.back();
}

// Gaussian elimination over the field of rational functions.
RatFunc elimination_determinant(RFMatrix m) {
  const int k = m.rows();
  RatFunc det(1);
  for (int c = 0; c < k; ++c) {
    int pivot = -1;
    for (int r = c; r < k; ++r)
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return RatFunc();
    if (pivot != c) {
      for (int j = 0; j < k; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const RatFunc inv = m(c, c).inverse();
    for (int r = c + 1; r < k; ++r) {
      if (m(r, c).is_zero()) continue;
      const RatFunc f = m(r, c) * inv;
      for (int j = c; j < k; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

// Multiplies each row by the product of its distinct denominators so the
// expansion only ever adds Laurent polynomials; returns the total factor.
LaurentPoly clear_row_denominators(RFMatrix& m) {
  LaurentPoly total(1);
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<LaurentPoly> dens;
    for (int j = 0; j < m.cols(); ++j) {
      const auto& d = m(i, j).den();
      if (m(i, j).is_zero() || d.is_constant()) continue;
      if (std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
    }
    if (dens.empty()) continue;
    LaurentPoly f(1);
    for (const auto& d : dens) f *= d;
    const RatFunc rf(f);
    for (int j = 0; j < m.cols(); ++j) m(i, j) *= rf;
    total *= f;
  }
  return total;
}

}  // namespace

RatFunc RFMatrix::determinant() const {
  if (rows_ != cols_) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (rows_ > 6) return elimination_determinant(*this);
  RFMatrix m = *this;
  LaurentPoly factor = clear_row_denominators(m);
  RatFunc det = laplace_determinant(m);
  if (factor.is_constant() && *factor.constant_value() == 1) return det;
  return det / RatFunc(factor);
}

RFMatrix RFMatrix::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  const int n = rows_;
  const RatFunc det = determinant();
  if (det.is_zero()) fail(ErrorKind::SingularMatrix, "matrix has zero determinant");
  if (n == 1) {
    RFMatrix inv(1, 1);
    inv(0, 0) = det.inverse();
    return inv;
  }
  RFMatrix inv(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 1; k <= n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      RatFunc c = minor(*this, rows, cols) / det;
      inv(i - 1, j - 1) = (i + j) % 2 ? -c : c;
    }
  return inv;
}

RFMatrix RFMatrix::specialize(const std::map<VarId, Rational>& point) const {
  RFMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = RatFunc(a_[k].evaluate(point));
  return m;
}

RFMatrix RFMatrix::substitute(const std::map<VarId, RatFunc>& values) const {
  RFMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].substitute(values);
  return m;
}

bool RFMatrix::is_lower_unipotent() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if ((*this)(i, j) != RatFunc(i == j ? 1 : 0)) return false;
  return true;
}

bool RFMatrix::is_upper_unipotent() const { return transpose().is_lower_unipotent(); }

bool RFMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool RFMatrix::all_laurent() const {
  return std::all_of(a_.begin(), a_.end(), [](const RatFunc& f) { return f.is_laurent(); });
}

RFMatrix operator*(const RFMatrix& a, const RFMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "shape mismatch in matrix product");
  RFMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const RatFunc& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const RatFunc& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

bool operator==(const RFMatrix& a, const RFMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    if (!(a.a_[k] == b.a_[k])) return false;
  return true;
}

std::string RFMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += i ? ",\n [" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

RatFunc minor(const RFMatrix& x, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size()) return RatFunc();
  return x.submatrix(rows, cols).determinant();
}

RFMatrix generator(GenKind kind, int i, int n, const RatFunc& value) {
  RFMatrix m = RFMatrix::identity(n);
  switch (kind) {
    case GenKind::Upper:
    case GenKind::Lower:
      if (i < 1 || i >= n) fail(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(i) + " for GL_" + std::to_string(n));
      if (kind == GenKind::Upper) m(i - 1, i) = RatFunc(1);
      else m(i, i - 1) = RatFunc(1);
      break;
    case GenKind::Cartan:
      if (i < 0 || i > n) fail(ErrorKind::IndexOutOfRange, "Cartan index " + std::to_string(i) + " for GL_" + std::to_string(n));
      if (value.is_zero()) fail(ErrorKind::ZeroFaceValue, "Cartan generator with zero value");
      for (int k = 0; k < i; ++k) m(k, k) = value;
      break;
  }
  return m;
}

RFMatrix lift_simple(int i, int n) {
  RFMatrix inv_up = generator(GenKind::Upper, i, n);
  inv_up(i - 1, i) = RatFunc(-1);
  return inv_up * generator(GenKind::Lower, i, n) * inv_up;
}

RFMatrix lift_word(int n, std::span<const int> letters) {
  RFMatrix m = RFMatrix::identity(n);
  for (int l : letters) m = m * lift_simple(std::abs(l), n);
  return m;
}

RFMatrix lift_weyl(const weyl::Permutation& w) {
  return lift_word(w.rank(), weyl::greedy_word(w));
}

RFMatrix star(const RFMatrix& g) {
  const RFMatrix w0 = lift_weyl(weyl::Permutation::longest(g.rows()));
  return w0 * g.inverse().transpose() * w0.inverse();
}

GaussFactors gauss_decompose(const RFMatrix& x) {
  const int n = x.rows();
  if (n != x.cols()) fail(ErrorKind::InvalidArgument, "Gaussian decomposition of a non-square matrix");
  std::vector<RatFunc> lead(n + 1, RatFunc(1));
  std::vector<int> prefix;
  for (int k = 1; k <= n; ++k) {
    prefix.push_back(k);
    lead[k] = minor(x, prefix, prefix);
    if (lead[k].is_zero())
      fail(ErrorKind::NotGaussianDecomposable, "leading principal minor of size " + std::to_string(k) + " vanishes");
  }
  GaussFactors f{RFMatrix::identity(n), RFMatrix::identity(n), RFMatrix::identity(n)};
  for (int k = 1; k <= n; ++k) f.diagonal(k - 1, k - 1) = lead[k] / lead[k - 1];
  for (int j = 1; j <= n; ++j) {
    std::vector<int> base(j - 1);
    std::iota(base.begin(), base.end(), 1);
    std::vector<int> full = base;
    full.push_back(j);
    for (int i = j + 1; i <= n; ++i) {
      std::vector<int> extended = base;
      extended.push_back(i);
      // Row set {1..j-1, i} against columns {1..j}, and its transpose analogue.
      f.lower(i - 1, j - 1) = minor(x, extended, full) / lead[j];
      f.upper(j - 1, i - 1) = minor(x, full, extended) / lead[j];
    }
  }
  return f;
}

RFMatrix unipotent_inverse(const RFMatrix& t) {
  const int n = t.rows();
  if (!t.is_upper_unipotent()) {
    if (t.is_lower_unipotent()) return unipotent_inverse(t.transpose()).transpose();
    fail(ErrorKind::InvalidArgument, "matrix is not unipotent triangular");
  }
  RFMatrix v = RFMatrix::identity(n);
  for (int j = 0; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) {
      RatFunc s;
      for (int k = i + 1; k <= j; ++k)
        if (!t(i, k).is_zero() && !v(k, j).is_zero()) s += t(i, k) * v(k, j);
      v(i, j) = -s;
    }
  return v;
}

}  // namespace dtcell::exact
