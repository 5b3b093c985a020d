#include "eigenkit/rational.hpp"

#include <climits>

#include "eigenkit/errors.hpp"

namespace eigenkit {

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw UsageError("not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

bool is_integral(const Rational& q) {
  return q.get_den() == 1;
}

int to_int(const Rational& q) {
  if (!is_integral(q) || !q.get_num().fits_sint_p()) {
    throw InternalError("expected a machine integer, got " + to_fraction_string(q));
  }
  return static_cast<int>(q.get_num().get_si());
}

long long to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw InternalError("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

Rational dot(const RatVec& a, const RatVec& b) {
  ensure(a.size() == b.size(), "dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  ensure(a.size() == b.size(), "add: dimension mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  ensure(a.size() == b.size(), "sub: dimension mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const RatVec& a, const Rational& c) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  ensure(cols_ == other.rows_, "matrix product: dimension mismatch");
  RatMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
    }
  return out;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
  ensure(cols_ == v.size(), "matrix-vector product: dimension mismatch");
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatMatrix RatMatrix::inverse() const {
  ensure(rows_ == cols_, "inverse of non-square matrix");
  const std::size_t n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    ensure(pivot < n, "singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RatVec solve(const RatMatrix& a, const RatVec& b) {
  return a.inverse() * b;
}

}  // namespace eigenkit
