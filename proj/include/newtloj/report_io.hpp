#pragma once

// JSON schema of reports and face tables, OFF export, and the seeded
// random-instance generator used by the CLI and the test suites.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "newtloj/exponent_engine.hpp"
#include "newtloj/newton_boundary.hpp"
#include "newtloj/polynomial.hpp"

namespace newtloj {

/// Rationals are strings "p/q" (or "p"), exponent vectors integer arrays.
nlohmann::json face_to_json(const FaceEntry& e);
FaceEntry face_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ExponentReport& r);
/// Inverse of report_to_json; ignores keys it does not know. Throws
/// ParseError on a malformed document.
ExponentReport report_from_json(const nlohmann::json& j);

/// OFF mesh of the compact boundary: vertices ascending, 2-faces in id
/// order with their vertices counterclockwise seen from outside, edges not
/// on any 2-face as "# edge i j" comments. Throws DimensionError in 2D.
std::string export_off(const NewtonBoundary& b);

struct RandomOptions {
  std::size_t dimension = 3;
  std::int64_t max_exponent = 12;
  std::size_t points = 8;
  std::uint64_t seed = 0;
  std::size_t max_draws = 10000;
};

/// Support with generic coefficients passing check_isolated, drawn by
/// guided rejection. With points == dimension, a Brieskorn-type support of
/// pure powers. Throws PreconditionError when the draw cap is exceeded.
Support random_support(const RandomOptions& opt);

}  // namespace newtloj
