#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace wsd {

// Dense row-major matrix of doubles; just enough for similarity-matrix chains.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), v_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return v_.empty(); }

  double& operator()(size_t r, size_t c) {
    assert(r < rows_ && c < cols_);
    return v_[r * cols_ + c];
  }
  double operator()(size_t r, size_t c) const {
    assert(r < rows_ && c < cols_);
    return v_[r * cols_ + c];
  }

  double max_value() const {
    double m = 0.0;
    for (double x : v_)
      if (x > m) m = x;
    return m;
  }

  void scale(double f) {
    for (double& x : v_) x *= f;
  }

  Matrix multiplied(const Matrix& rhs) const {
    assert(cols_ == rhs.rows_);
    Matrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t k = 0; k < cols_; ++k) {
        const double a = (*this)(r, k);
        if (a == 0.0) continue;
        for (size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
      }
    return out;
  }

  // Ties resolve to the smallest row, then the smallest column.
  std::pair<size_t, size_t> argmax() const {
    size_t br = 0, bc = 0;
    double best = -1.0;
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) > best) {
          best = (*this)(r, c);
          br = r;
          bc = c;
        }
    return {br, bc};
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<double> v_;
};

}  // namespace wsd
