#include "newtloj/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "newtloj/errors.hpp"

namespace newtloj {

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const Integer num = parse_integer(s.substr(0, slash), text);
  const std::string_view den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer floor(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

char axis_name(Axis a) noexcept { return "xyz"[index(a)]; }

Axis axis_from_name(std::string_view name) {
  if (name == "x") return Axis::X;
  if (name == "y") return Axis::Y;
  if (name == "z") return Axis::Z;
  throw ParseError("unknown axis '" + std::string(name) + "'");
}

std::vector<Axis> AxisSet::members() const {
  std::vector<Axis> out;
  for (Axis a : kAllAxes)
    if (contains(a)) out.push_back(a);
  return out;
}

std::string AxisSet::str() const {
  std::string s;
  for (Axis a : members()) s += axis_name(a);
  return s;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("lattice addition overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("lattice subtraction overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("lattice multiplication overflow");
  return r;
}

// ---------------------------------------------------------------- IntVec

namespace {

void check_size(std::size_t n) {
  if (n != 2 && n != 3) throw DimensionError("vector length must be 2 or 3, got " + std::to_string(n));
}

void check_same(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionError("vector length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

IntVec::IntVec(std::initializer_list<std::int64_t> coords)
    : IntVec(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

IntVec::IntVec(std::span<const std::int64_t> coords) {
  check_size(coords.size());
  n_ = static_cast<std::uint8_t>(coords.size());
  std::copy(coords.begin(), coords.end(), c_.begin());
}

IntVec IntVec::zero(std::size_t n) {
  check_size(n);
  IntVec v;
  v.n_ = static_cast<std::uint8_t>(n);
  return v;
}

IntVec IntVec::unit(std::size_t n, std::size_t i) {
  IntVec v = zero(n);
  v.c_[i] = 1;
  return v;
}

bool IntVec::is_zero() const noexcept {
  return std::all_of(begin(), end(), [](std::int64_t x) { return x == 0; });
}

bool IntVec::strictly_positive() const noexcept {
  return n_ > 0 && std::all_of(begin(), end(), [](std::int64_t x) { return x > 0; });
}

bool IntVec::non_negative() const noexcept {
  return std::all_of(begin(), end(), [](std::int64_t x) { return x >= 0; });
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  check_same(a.n_, b.n_);
  IntVec r = a;
  for (std::size_t i = 0; i < a.n_; ++i) r.c_[i] = checked_add(a.c_[i], b.c_[i]);
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  check_same(a.n_, b.n_);
  IntVec r = a;
  for (std::size_t i = 0; i < a.n_; ++i) r.c_[i] = checked_sub(a.c_[i], b.c_[i]);
  return r;
}

IntVec operator-(const IntVec& a) {
  IntVec r = a;
  for (std::size_t i = 0; i < a.n_; ++i) r.c_[i] = checked_sub(0, a.c_[i]);
  return r;
}

IntVec operator*(std::int64_t s, const IntVec& a) {
  IntVec r = a;
  for (std::size_t i = 0; i < a.n_; ++i) r.c_[i] = checked_mul(s, a.c_[i]);
  return r;
}

bool operator==(const IntVec& a, const IntVec& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
}

std::strong_ordering operator<=>(const IntVec& a, const IntVec& b) noexcept {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
  check_same(a.size(), b.size());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntVec primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x);
  if (g <= 1) return v;
  IntVec r = v;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec generalized_cross(std::span<const IntVec> vs, std::size_t n) {
  check_size(n);
  if (vs.size() != n - 1) throw DimensionError("generalized cross product needs n-1 vectors");
  for (const IntVec& v : vs) check_same(v.size(), n);
  if (n == 2) return IntVec{checked_sub(0, vs[0][1]), vs[0][0]};
  const IntVec& a = vs[0];
  const IntVec& b = vs[1];
  return IntVec{checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
                checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
                checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
}

std::size_t rank(std::span<const IntVec> vs) {
  // Fraction-free Gaussian elimination over exact integers.
  if (vs.empty()) return 0;
  const std::size_t n = vs[0].size();
  std::vector<std::vector<Integer>> rows;
  for (const IntVec& v : vs) {
    check_same(v.size(), n);
    rows.emplace_back(v.begin(), v.end());
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Integer a = rows[r][col];
      const Integer b = rows[i][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] = rows[i][j] * a - rows[r][j] * b;
    }
    ++r;
  }
  return r;
}

// ------------------------------------------------------- ExponentVector

ExponentVector::ExponentVector(std::initializer_list<std::int64_t> coords) : ExponentVector(IntVec(coords)) {}

ExponentVector::ExponentVector(const IntVec& v) : v_(v) {
  check_size(v.size());
  if (!v.non_negative()) throw PreconditionError("exponent vectors must be non-negative");
}

std::int64_t ExponentVector::degree() const {
  std::int64_t d = 0;
  for (std::int64_t x : v_) d = checked_add(d, x);
  return d;
}

IntVec operator-(const ExponentVector& a, const ExponentVector& b) { return a.vec() - b.vec(); }

WeightVector::WeightVector(std::initializer_list<std::int64_t> coords) : WeightVector(IntVec(coords)) {}

WeightVector::WeightVector(const IntVec& v) : v_(v) {
  check_size(v.size());
  if (v.is_zero()) throw PreconditionError("weight vector must be non-zero");
}

bool WeightVector::is_primitive() const { return primitive(v_) == v_; }

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) { return os << v.vec(); }
std::ostream& operator<<(std::ostream& os, const WeightVector& v) { return os << v.vec(); }

std::int64_t inner_product(const WeightVector& w, const ExponentVector& p) { return dot(w.vec(), p.vec()); }

WeightVector primitive_positive_normal(const ExponentVector& p1, const ExponentVector& p2,
                                       const ExponentVector& p3) {
  if (p1.size() != 3 || p2.size() != 3 || p3.size() != 3)
    throw DimensionError("primitive_positive_normal expects points in N^3");
  const std::array<IntVec, 2> diffs{p2 - p1, p3 - p1};
  IntVec n = primitive(generalized_cross(diffs, 3));
  if (n.is_zero()) throw DegeneracyError("points are collinear");
  if (n[0] < 0 || (n[0] == 0 && (n[1] < 0 || (n[1] == 0 && n[2] < 0)))) n = -n;
  if (!n.strictly_positive()) {
    std::ostringstream os;
    os << "plane through " << p1 << ", " << p2 << ", " << p3 << " has no positive normal";
    throw NotInnerNormalError(os.str());
  }
  return WeightVector(n);
}

WeightedMin weighted_min(const WeightVector& w, std::span<const ExponentVector> points) {
  if (!w.positive()) throw PreconditionError("weighted_min requires a strictly positive weight");
  if (points.empty()) throw PreconditionError("weighted_min over an empty support");
  WeightedMin out;
  bool first = true;
  for (const ExponentVector& p : points) {
    const std::int64_t l = inner_product(w, p);
    if (first || l < out.level) {
      out.level = l;
      out.argmin.clear();
      first = false;
    }
    if (l == out.level) out.argmin.push_back(p);
  }
  std::sort(out.argmin.begin(), out.argmin.end());
  return out;
}

int affine_dimension(std::span<const ExponentVector> points) {
  if (points.empty()) return -1;
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(diffs));
}

}  // namespace newtloj
