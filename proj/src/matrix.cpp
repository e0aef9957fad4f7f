#include "plab/matrix.hpp"

#include <stdexcept>

#include "plab/scalar.hpp"

namespace plab {

Rat rat_parse(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);  // mpq rejects a leading '+'
  if (t.empty()) throw std::invalid_argument("empty rational");
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
      throw std::invalid_argument("bad rational: " + s);
  Rat r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat(0, 0);
  Mat m(int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols_; ++j) {
    assert(int(cols[j].size()) == m.rows_);
    for (int i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_);
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = (*this)(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (sgn(o(k, j)) == 0) continue;
        r(i, j) += aik * o(k, j);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat operator*(const Rat& s, const Mat& m) {
  Mat r(m.rows_, m.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
  return r;
}

Vec Mat::apply(const Vec& v) const {
  assert(int(v.size()) == cols_);
  Vec r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

Vec Mat::column(int j) const {
  Vec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

std::vector<int> Mat::rref(Mat& m, int main_cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < main_cols && row < m.rows_; ++col) {
    int p = -1;
    for (int i = row; i < m.rows_; ++i)
      if (sgn(m(i, col)) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols_; ++j) std::swap(m(p, j), m(row, j));
    Rat inv = 1 / m(row, col);
    for (int j = col; j < m.cols_; ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows_; ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      Rat f = m(i, col);
      for (int j = col; j < m.cols_; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Mat::rank() const {
  Mat m = *this;
  return int(rref(m, cols_).size());
}

Rat Mat::det() const {
  assert(rows_ == cols_);
  Mat m = *this;
  Rat d(1);
  for (int col = 0; col < cols_; ++col) {
    int p = -1;
    for (int i = col; i < rows_; ++i)
      if (sgn(m(i, col)) != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    Rat inv = 1 / m(col, col);
    for (int i = col + 1; i < rows_; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      Rat f = m(i, col) * inv;
      for (int j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

std::vector<Vec> Mat::nullspace() const {
  Mat m = *this;
  std::vector<int> pivots = rref(m, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> Mat::solve(const Mat& b) const {
  assert(b.rows() == rows_);
  Mat aug(rows_, cols_ + b.cols());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, cols_ + j) = b(i, j);
  }
  std::vector<int> pivots = rref(aug, cols_);
  // Consistency: no row of the form [0 ... 0 | nonzero].
  for (int i = int(pivots.size()); i < rows_; ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (sgn(aug(i, cols_ + j)) != 0) return std::nullopt;
  Mat x(cols_, b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(int(r), cols_ + j);
  return x;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
  Mat bb(rows_, 1);
  for (int i = 0; i < rows_; ++i) bb(i, 0) = b[i];
  auto x = solve(bb);
  if (!x) return std::nullopt;
  return x->column(0);
}

Mat Mat::inverse() const {
  assert(rows_ == cols_);
  auto x = solve(identity(rows_));
  if (!x || x->rows() != rows_) throw std::domain_error("Mat::inverse: singular");
  // solve() returns a particular solution; uniqueness needs full rank.
  Mat check = (*this) * (*x);
  if (!(check == identity(rows_))) throw std::domain_error("Mat::inverse: singular");
  return *x;
}

bool Mat::is_positive_definite() const {
  assert(rows_ == cols_);
  for (int k = 1; k <= rows_; ++k) {
    Mat minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = (*this)(i, j);
    if (sgn(minor.det()) <= 0) return false;
  }
  return true;
}

Mat vstack(const Mat& top, const Mat& bottom) {
  assert(top.cols() == bottom.cols());
  Mat m(top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < bottom.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
  return m;
}

}  // namespace plab
