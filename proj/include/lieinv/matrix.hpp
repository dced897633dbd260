#ifndef LIEINV_MATRIX_HPP
#define LIEINV_MATRIX_HPP

#include <optional>
#include <vector>

#include "lieinv/rational.hpp"

namespace lieinv {

// Dense matrix over exact rationals.  Elimination uses a fixed pivot rule
// (first nonzero entry, scanning rows top to bottom) so that every derived
// object -- slice complements, ad_epsilon preimages, transition blocks --
// is deterministic across runs.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<Rat> col(int j) const {
    std::vector<Rat> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  void set_col(int j, const std::vector<Rat>& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

  RatMat operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatchError("matrix product shape mismatch");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k) == 0) continue;
        for (int j = 0; j < o.cols_; ++j)
          if (o.at(k, j) != 0) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatchError("matrix apply shape mismatch");
    std::vector<Rat> r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
  }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (at(i, c) != 0) { p = i; break; }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
      Rat inv = at(r, c);
      for (int j = 0; j < cols_; ++j) at(r, j) /= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || at(i, c) == 0) continue;
        Rat f = at(i, c);
        for (int j = 0; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    RatMat m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Solve A x = b.  Free variables are set to zero (canonical solution);
  // returns nullopt when inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw DimensionMismatchError("solve rhs shape mismatch");
    RatMat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    std::vector<int> piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    std::vector<Rat> x(cols_);
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.at(static_cast<int>(k), cols_);
    return x;
  }

  // Basis of the kernel, one vector per free column, in column order.
  std::vector<std::vector<Rat>> nullspace() const {
    RatMat r = *this;
    std::vector<int> piv = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Rat> x(cols_);
      x[f] = 1;
      for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = -r.at(static_cast<int>(k), f);
      basis.push_back(std::move(x));
    }
    return basis;
  }

  RatMat inverse() const {
    if (rows_ != cols_) throw DimensionMismatchError("inverse of non-square matrix");
    RatMat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = 1;
    }
    std::vector<int> piv = aug.rref();
    if (static_cast<int>(piv.size()) != rows_) throw DefectError("matrix not invertible");
    RatMat inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace lieinv

#endif
