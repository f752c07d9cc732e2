#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "clasperkit/ints.hpp"

namespace clasperkit {

// Dense matrix of exact integers, row-major. 0x0 matrices are legal and show
// up all over (empty links, trivial groups).
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-() const;

  bool is_symmetric() const;
  std::vector<Int> diagonal() const;
  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> col(std::size_t j) const;

  std::vector<Int> mul_vec(const std::vector<Int>& x) const;

  // Exact determinant (fraction-free Bareiss elimination).
  Int determinant() const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Direct sum diag(a, b).
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

}  // namespace clasperkit
