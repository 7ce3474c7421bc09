#pragma once

// Exact lattice and rational arithmetic shared by every geometric module.
//
// Lattice coordinates are 64-bit integers with overflow-checked arithmetic;
// every quantity that can leave the lattice (levels divided by normal
// entries, areas, exponents) is an arbitrary-precision rational.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace newtloj {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
/// Inverse of to_string; also accepts "-p/q" and surrounding whitespace.
Rational parse_rational(std::string_view text);
Integer floor(const Rational& r);

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAllAxes{Axis::X, Axis::Y, Axis::Z};

constexpr std::size_t index(Axis a) noexcept { return static_cast<std::size_t>(a); }
char axis_name(Axis a) noexcept;
/// Accepts 'x', 'y', 'z'; throws ParseError otherwise.
Axis axis_from_name(std::string_view name);

/// Set of coordinate axes, at most three members.
class AxisSet {
 public:
  constexpr AxisSet() = default;
  constexpr AxisSet(std::initializer_list<Axis> axes) {
    for (Axis a : axes) insert(a);
  }

  constexpr void insert(Axis a) noexcept { bits_ |= bit(a); }
  constexpr bool contains(Axis a) const noexcept { return (bits_ & bit(a)) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept {
    return ((bits_ >> 0) & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1);
  }
  std::vector<Axis> members() const;
  /// e.g. "xz", or "" when empty.
  std::string str() const;

  friend constexpr AxisSet operator&(AxisSet a, AxisSet b) noexcept {
    AxisSet r;
    r.bits_ = a.bits_ & b.bits_;
    return r;
  }
  friend constexpr bool operator==(AxisSet, AxisSet) = default;

 private:
  static constexpr std::uint8_t bit(Axis a) noexcept {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(a));
  }
  std::uint8_t bits_ = 0;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Integer vector of length 2 or 3 with no sign restriction. Used for
/// differences, cross products and candidate normals.
class IntVec {
 public:
  IntVec() = default;
  IntVec(std::initializer_list<std::int64_t> coords);
  explicit IntVec(std::span<const std::int64_t> coords);
  static IntVec zero(std::size_t n);
  static IntVec unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator[](std::size_t i) const noexcept { return c_[i]; }
  std::int64_t& operator[](std::size_t i) noexcept { return c_[i]; }
  const std::int64_t* begin() const noexcept { return c_.data(); }
  const std::int64_t* end() const noexcept { return c_.data() + n_; }

  bool is_zero() const noexcept;
  bool strictly_positive() const noexcept;
  bool non_negative() const noexcept;

  friend IntVec operator+(const IntVec& a, const IntVec& b);
  friend IntVec operator-(const IntVec& a, const IntVec& b);
  friend IntVec operator-(const IntVec& a);
  friend IntVec operator*(std::int64_t s, const IntVec& a);

  friend bool operator==(const IntVec& a, const IntVec& b) noexcept;
  friend std::strong_ordering operator<=>(const IntVec& a, const IntVec& b) noexcept;

 private:
  std::array<std::int64_t, 3> c_{};
  std::uint8_t n_ = 0;
};

std::int64_t dot(const IntVec& a, const IntVec& b);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);
/// Generalized cross product: the vector orthogonal to the n-1 given
/// vectors in Z^n (n = 2: rotate by 90 degrees; n = 3: a x b).
IntVec generalized_cross(std::span<const IntVec> vs, std::size_t n);
/// Rank of a set of integer vectors (exact).
std::size_t rank(std::span<const IntVec> vs);

/// A lattice point in N^2 or N^3 standing for a monomial.
class ExponentVector {
 public:
  ExponentVector() = default;
  ExponentVector(std::initializer_list<std::int64_t> coords);
  explicit ExponentVector(const IntVec& v);

  std::size_t size() const noexcept { return v_.size(); }
  std::int64_t operator[](std::size_t i) const noexcept { return v_[i]; }
  std::int64_t operator[](Axis a) const noexcept { return v_[index(a)]; }
  const IntVec& vec() const noexcept { return v_; }
  const std::int64_t* begin() const noexcept { return v_.begin(); }
  const std::int64_t* end() const noexcept { return v_.end(); }
  std::int64_t degree() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept {
    return a.v_ <=> b.v_;
  }

 private:
  IntVec v_;
};

IntVec operator-(const ExponentVector& a, const ExponentVector& b);

/// Weight vector (supporting or normal vector). Not all zero.
class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(std::initializer_list<std::int64_t> coords);
  explicit WeightVector(const IntVec& v);

  std::size_t size() const noexcept { return v_.size(); }
  std::int64_t operator[](std::size_t i) const noexcept { return v_[i]; }
  std::int64_t operator[](Axis a) const noexcept { return v_[index(a)]; }
  const IntVec& vec() const noexcept { return v_; }
  const std::int64_t* begin() const noexcept { return v_.begin(); }
  const std::int64_t* end() const noexcept { return v_.end(); }

  /// Every entry >= 1.
  bool positive() const noexcept { return v_.strictly_positive(); }
  /// Entries have gcd 1.
  bool is_primitive() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend std::strong_ordering operator<=>(const WeightVector& a, const WeightVector& b) noexcept {
    return a.v_ <=> b.v_;
  }

 private:
  IntVec v_;
};

std::ostream& operator<<(std::ostream& os, const IntVec& v);
std::ostream& operator<<(std::ostream& os, const ExponentVector& v);
std::ostream& operator<<(std::ostream& os, const WeightVector& v);

std::int64_t inner_product(const WeightVector& w, const ExponentVector& p);

/// Primitive integer normal of the plane through three lattice points in
/// N^3, oriented so that every entry is positive.
WeightVector primitive_positive_normal(const ExponentVector& p1, const ExponentVector& p2,
                                       const ExponentVector& p3);

struct WeightedMin {
  std::int64_t level = 0;
  std::vector<ExponentVector> argmin;  // sorted ascending
};

/// Minimum of <w, p> over the points; w must be strictly positive.
WeightedMin weighted_min(const WeightVector& w, std::span<const ExponentVector> points);

/// Dimension of the affine hull of the points (-1 for an empty set).
int affine_dimension(std::span<const ExponentVector> points);

}  // namespace newtloj
