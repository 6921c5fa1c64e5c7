#pragma once
// Dense exact matrices over a field scalar (Rational or Cyclotomic) with
// Gaussian elimination for rank and nullspace, plus a sparse rank routine for
// the large, very sparse commutation systems.
#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "tanabe/rational.hpp"

namespace tanabe {

template <class T>
class Matrix {
 public:
  Matrix(long rows, long cols, const T& zero)
      : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows * cols), zero) {}

  static Matrix identity(long n, const T& one) {
    Matrix m(n, n, zeroLike(one));
    for (long i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  T& at(long i, long j) { return d_[static_cast<size_t>(i * cols_ + j)]; }
  const T& at(long i, long j) const {
    return d_[static_cast<size_t>(i * cols_ + j)];
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_, zeroElement());
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix m(rows_, o.cols_, zeroElement());
    for (long i = 0; i < rows_; ++i)
      for (long k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (isZero(a)) continue;
        for (long j = 0; j < o.cols_; ++j) {
          if (isZero(o.at(k, j))) continue;
          m.at(i, j) += a * o.at(k, j);
        }
      }
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    checkSameShape(o);
    Matrix m = *this;
    for (size_t i = 0; i < d_.size(); ++i) m.d_[i] += o.d_[i];
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    checkSameShape(o);
    Matrix m = *this;
    for (size_t i = 0; i < d_.size(); ++i) m.d_[i] -= o.d_[i];
    return m;
  }

  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (T& x : m.d_) x = x * s;
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool isZeroMatrix() const {
    for (const T& x : d_)
      if (!isZero(x)) return false;
    return true;
  }

  // Row echelon reduction in place; returns pivot column indices.
  std::vector<long> echelonize() {
    std::vector<long> pivots;
    long r = 0;
    for (long c = 0; c < cols_ && r < rows_; ++c) {
      long p = -1;
      for (long i = r; i < rows_; ++i)
        if (!isZero(at(i, c))) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (long j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
      T inv = inverseOf(at(r, c));
      for (long j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
      // Columns where the pivot row is nonzero (skip the rest when updating).
      std::vector<long> nz;
      for (long j = c; j < cols_; ++j)
        if (!isZero(at(r, j))) nz.push_back(j);
      for (long i = 0; i < rows_; ++i) {
        if (i == r || isZero(at(i, c))) continue;
        T f = at(i, c);
        for (long j : nz) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  long rank() const {
    Matrix m = *this;
    return static_cast<long>(m.echelonize().size());
  }

  long nullity() const { return cols_ - rank(); }

  // Basis of the right nullspace {v : A v = 0}.
  std::vector<std::vector<T>> nullspace() const {
    Matrix m = *this;
    std::vector<long> pivots = m.echelonize();
    std::vector<bool> isPivot(static_cast<size_t>(cols_), false);
    for (long c : pivots) isPivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<T>> basis;
    for (long f = 0; f < cols_; ++f) {
      if (isPivot[static_cast<size_t>(f)]) continue;
      std::vector<T> v(static_cast<size_t>(cols_), zeroElement());
      v[static_cast<size_t>(f)] = oneLike(zeroElement());
      for (size_t r = 0; r < pivots.size(); ++r)
        v[static_cast<size_t>(pivots[r])] =
            -(m.at(static_cast<long>(r), f) * oneLike(zeroElement()));
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  T zeroElement() const {
    if (d_.empty()) throw DimensionError("zero-sized matrix has no scalar context");
    return zeroLike(d_[0]);
  }
  void checkSameShape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("matrix shape mismatch");
  }
  long rows_, cols_;
  std::vector<T> d_;
};

// Sparse row: (column, coefficient) pairs sorted by column, coefficients nonzero.
template <class T>
using SparseRow = std::vector<std::pair<long, T>>;

// Rank of a sparse row system over a field; destroys its input.
template <class T>
long sparseRank(std::vector<SparseRow<T>> rows) {
  std::vector<SparseRow<T>> pivots;  // normalized, leading coeff 1
  std::map<long, size_t> pivotByCol;  // leading column -> index into pivots
  auto axpy = [](SparseRow<T>& x, const T& f, const SparseRow<T>& y) {
    // x -= f * y, merging sorted-by-column representations.
    SparseRow<T> out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        T v = -(f * y[j].second);
        if (!isZero(v)) out.emplace_back(y[j].first, std::move(v));
        ++j;
      } else {
        T v = x[i].second - f * y[j].second;
        if (!isZero(v)) out.emplace_back(x[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    x = std::move(out);
  };
  long rank = 0;
  for (SparseRow<T>& row : rows) {
    while (!row.empty()) {
      auto it = pivotByCol.find(row.front().first);
      if (it == pivotByCol.end()) break;
      axpy(row, row.front().second, pivots[it->second]);
    }
    if (row.empty()) continue;
    T inv = inverseOf(row.front().second);
    for (auto& e : row) e.second = e.second * inv;
    pivotByCol[row.front().first] = pivots.size();
    pivots.push_back(std::move(row));
    ++rank;
  }
  return rank;
}

}  // namespace tanabe
