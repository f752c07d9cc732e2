#pragma once

#include <cstddef>
#include <vector>

#include "clasperkit/int_matrix.hpp"
#include "clasperkit/ints.hpp"

namespace clasperkit {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  RatMatrix operator*(const RatMatrix& o) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Exact inverse of a nonsingular square integer matrix; throws SingularError.
RatMatrix rational_inverse(const IntMatrix& s);

// Inverse of a determinant +-1 integer matrix, as an integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

}  // namespace clasperkit
