#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace eigenkit {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<int>;

/// Canonical "p/q" text form (q >= 1, always present).
std::string to_fraction_string(const Rational& q);

/// Accepts "p/q" or a plain integer.
Rational parse_rational(std::string_view text);

RatVec to_rational(const IntVec& v);
bool is_integral(const Rational& q);
int to_int(const Rational& q);  // throws unless integral and in range
long long to_int64(const Integer& z);

Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rational& c);
bool is_zero(const RatVec& v);

/// Dense row-major rational matrix; small sizes only (rank <= 9).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatVec operator*(const RatVec& v) const;
  bool operator==(const RatMatrix& other) const = default;

  /// Throws InternalError when singular.
  RatMatrix inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Solve A x = b for square nonsingular A.
RatVec solve(const RatMatrix& a, const RatVec& b);

}  // namespace eigenkit
