#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weylthick {

using Rational = mpq_class;

/// Parses "p", "-p", "p/q" or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

/// Exact vector with one rational coordinate per ambient dimension.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static RationalVector unit(std::size_t dim, std::size_t axis);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator-=(const RationalVector& other);
  RationalVector& operator*=(const Rational& scale);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector v) { return v *= s; }
  friend RationalVector operator-(RationalVector v) { return v *= Rational(-1); }

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic; used only for ordered containers.
  friend bool operator<(const RationalVector& a, const RationalVector& b);

  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// Parses "(1, 1/2, 0)" or "[1,1/2,0]" or "1,1/2,0".
RationalVector parse_vector(std::string_view text);

/// Euclidean pairing of coordinate vectors.
Rational dot(const RationalVector& a, const RationalVector& b);

/// True iff a = c * b for some rational c > 0. Both must be nonzero.
bool positively_proportional(const RationalVector& a, const RationalVector& b);

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RationalVector apply(const RationalVector& v) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Solves the square system a * x = b by exact Gauss-Jordan elimination.
/// Throws PreconditionError when a is singular.
RationalVector solve(RationalMatrix a, RationalVector b);

}  // namespace weylthick
