#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const RationalMatrix& o) const = default;

  static RationalMatrix identity(std::size_t n);

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& k) const;
  RationalVector operator*(const RationalVector& v) const;

  // Top-left square corner, rows and columns [0, n).
  RationalMatrix corner(std::size_t n) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& k, const RationalVector& v);
std::string vector_str(const RationalVector& v);

}  // namespace gpd
