#include "kaz/rational.hpp"

#include <charconv>
#include <limits>

#include "kaz/error.hpp"
#include "kaz/vector.hpp"

namespace kaz {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-')
    throw UserError("malformed rational \"" + std::string(text) + "\"");
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw UserError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

Rational power(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::int64_t to_int64(const Integer& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) throw UserError("integer " + z.get_str() + " out of range");
  return z.get_si();
}

// ---- vectors ----

bool RationalVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

bool operator==(const RationalVector& a, const RationalVector& b) { return a.coords_ == b.coords_; }

std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
  std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector unit_vector(std::size_t dim, std::size_t i) {
  RationalVector v(dim);
  v[i] = 1;
  return v;
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << to_string(v[i]);
  return os << ')';
}

RationalVector LatticePoint::to_rational() const {
  RationalVector v(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) v[i] = Rational(static_cast<long>(coords_[i]));
  return v;
}

bool LatticePoint::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticePoint& LatticePoint::operator*=(std::int64_t c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

LatticePoint to_lattice_point(const RationalVector& v) {
  LatticePoint p(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!is_integer(v[i])) throw UserError("coordinate " + to_string(v[i]) + " is not an integer");
    p[i] = to_int64(v[i].get_num());
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

}  // namespace kaz
