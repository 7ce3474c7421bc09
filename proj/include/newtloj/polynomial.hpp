#pragma once

// Supports of polynomials in 2 or 3 variables with exact rational (or
// generic, unspecified) coefficients, and their text / JSON forms.
//
// Text grammar (whitespace-insensitive):
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor | '/' nat)*
//   factor := nat | var ['^' nat] | '(' poly ')'
//   var    := 'x' | 'y' | 'z'        ('z' only in dimension 3)
//
// Parenthesized sums are expanded, so "(x^4 + y^3)*z" is accepted.
//
// JSON form:
//   {"vars":["x","y","z"], "monomials":[{"e":[4,0,1],"c":"1"}, ...]}
// where "c" is optional; a monomial without it has a generic coefficient.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "newtloj/lattice.hpp"

namespace newtloj {

/// Concrete rational, or std::nullopt for a generic coefficient.
using Coefficient = std::optional<Rational>;

struct Monomial {
  ExponentVector exponents;
  Coefficient coefficient;

  bool generic() const noexcept { return !coefficient.has_value(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class Support {
 public:
  explicit Support(std::size_t dimension);
  Support(std::size_t dimension, std::span<const ExponentVector> points);  // generic coefficients

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Adds a term, combining like terms. A concrete sum of zero removes the
  /// monomial; a generic coefficient absorbs anything added to it.
  void add(const ExponentVector& e, const Coefficient& c);

  bool contains(const ExponentVector& e) const { return terms_.count(e) != 0; }
  Coefficient coefficient(const ExponentVector& e) const;
  const std::map<ExponentVector, Coefficient>& terms() const noexcept { return terms_; }
  std::vector<Monomial> monomials() const;
  /// Exponent vectors, ascending.
  std::vector<ExponentVector> points() const;
  bool all_concrete() const;

  /// Terms whose exponent is among `points`.
  Support restricted_to(std::span<const ExponentVector> pts) const;
  /// Formal partial derivative with respect to variable `var`.
  Support derivative(std::size_t var) const;
  /// Same exponents, all coefficients generic.
  Support generic() const;
  /// Replaces generic coefficients by seeded random rationals; concrete
  /// coefficients are kept.
  Support instantiate(std::uint64_t seed) const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  std::size_t dim_;
  std::map<ExponentVector, Coefficient> terms_;
};

/// Variable names "x","y"[,"z"] for the dimension.
std::vector<std::string> variable_names(std::size_t dimension);

Support parse_polynomial(std::string_view text, std::size_t dimension);
Support parse_support_json(const nlohmann::json& j);
/// JSON when the first non-blank character is '{', polynomial text
/// otherwise. `dimension` is ignored for JSON (taken from "vars").
Support parse_input(std::string_view text, std::size_t dimension);

/// Canonical text: monomials sorted by exponents descending. Generic
/// coefficients are written as bare monomials.
std::string serialize_support(const Support& s);
/// Same, with custom variable names (display only; not re-parseable in general).
std::string serialize_support(const Support& s, const std::vector<std::string>& names);
nlohmann::json support_to_json(const Support& s);

}  // namespace newtloj
