#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "kaz/rational.hpp"

namespace kaz {

/// Exact point of Q^n. Compared lexicographically.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator-=(const RationalVector& other);
  RationalVector& operator*=(const Rational& c);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& c, RationalVector a) { return a *= c; }
  friend RationalVector operator-(RationalVector a) { return a *= Rational(-1); }

  friend bool operator==(const RationalVector& a, const RationalVector& b);
  friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b);

 private:
  std::vector<Rational> coords_;
};

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector unit_vector(std::size_t dim, std::size_t i);
std::ostream& operator<<(std::ostream& os, const RationalVector& v);

/// Point of Z^n.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t dim) : coords_(dim, 0) {}
  explicit LatticePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  RationalVector to_rational() const;
  bool is_zero() const;

  LatticePoint& operator+=(const LatticePoint& other);
  LatticePoint& operator-=(const LatticePoint& other);
  LatticePoint& operator*=(std::int64_t c);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator*(std::int64_t c, LatticePoint a) { return a *= c; }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Returns the point when every coordinate is an integer, throws UserError otherwise.
LatticePoint to_lattice_point(const RationalVector& v);
std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

}  // namespace kaz
