#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "plab/rational.hpp"

namespace plab {

// Dense exact matrix over Q. Sizes here stay small (slice dimensions are a
// few hundred at most), so plain Gaussian elimination on canonicalized
// mpq entries is the right tool.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat from_columns(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  friend Mat operator*(const Rat& s, const Mat& m);
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Vec apply(const Vec& v) const;
  Vec column(int j) const;
  bool is_zero() const;

  int rank() const;
  Rat det() const;

  // Basis of the right nullspace.
  std::vector<Vec> nullspace() const;

  // Solves A x = b for each column of b; returns nullopt if inconsistent.
  std::optional<Mat> solve(const Mat& b) const;
  std::optional<Vec> solve(const Vec& b) const;

  // Inverse of a square nonsingular matrix; throws on singular input.
  Mat inverse() const;

  // Symmetric positive definiteness via the leading-principal-minor test.
  bool is_positive_definite() const;

 private:
  // Row-reduces [this | aug] in place (aug may be empty); returns pivot
  // columns of the `this` block.
  static std::vector<int> rref(Mat& m, int main_cols);

  int rows_, cols_;
  std::vector<Rat> a_;
};

// Stack A over B (same column count).
Mat vstack(const Mat& top, const Mat& bottom);

}  // namespace plab
