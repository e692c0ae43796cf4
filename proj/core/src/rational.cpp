#include "weylthick/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "weylthick/error.hpp"

namespace weylthick {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, slash)));
    mpz_class den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
    auto whole = s.substr(0, dot_pos);
    auto frac = s.substr(dot_pos + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !is_integer_literal(frac) || frac.front() == '-' || frac.front() == '+')
      throw ParseError("bad decimal literal '" + std::string(s) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(parse_integer(whole) * scale + parse_integer(frac), scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

RationalVector RationalVector::unit(std::size_t dim, std::size_t axis) {
  RationalVector v(dim);
  v[axis] = 1;
  return v;
}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& scale) {
  for (auto& c : coords_) c *= scale;
  return *this;
}

bool operator<(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::string RationalVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += weylthick::to_string(coords_[i]);
  }
  return out + ")";
}

RationalVector parse_vector(std::string_view text) {
  auto s = trim(text);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
    const char close = s.front() == '(' ? ')' : ']';
    if (s.back() != close) throw ParseError("unbalanced vector literal '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Rational> coords;
  while (true) {
    auto comma = s.find(',');
    coords.push_back(parse_rational(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return RationalVector(std::move(coords));
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw PreconditionError("dimension mismatch in dot product");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
  }
  return sum;
}

bool positively_proportional(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return false;
  if (a.is_zero() || b.is_zero()) throw PreconditionError("zero vector is not a direction");
  Rational ratio;
  bool have_ratio = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int sa = sgn(a[i]);
    const int sb = sgn(b[i]);
    if (sa == 0 && sb == 0) continue;
    if (sa == 0 || sb == 0) return false;
    Rational r = a[i] / b[i];
    if (!have_ratio) {
      if (sgn(r) < 0) return false;
      ratio = r;
      have_ratio = true;
    } else if (r != ratio) {
      return false;
    }
  }
  return have_ratio;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw PreconditionError("dimension mismatch in matrix-vector product");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& m = (*this)(r, c);
      if (sgn(m) != 0 && sgn(v[c]) != 0) sum += m * v[c];
    }
    out[r] = sum;
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("dimension mismatch in matrix product");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RationalVector solve(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw PreconditionError("solve: system is not square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw PreconditionError("solve: singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      std::swap(b[col], b[pivot]);
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t c = col; c < n; ++c) a(col, c) *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }
  return b;
}

}  // namespace weylthick
