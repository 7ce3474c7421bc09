#include "newtloj/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "newtloj/errors.hpp"
#include "newtloj/random.hpp"

namespace newtloj {

// ---------------------------------------------------------------- Support

Support::Support(std::size_t dimension) : dim_(dimension) {
  if (dimension != 2 && dimension != 3)
    throw DimensionError("dimension must be 2 or 3, got " + std::to_string(dimension));
}

Support::Support(std::size_t dimension, std::span<const ExponentVector> points) : Support(dimension) {
  for (const ExponentVector& p : points) add(p, std::nullopt);
}

void Support::add(const ExponentVector& e, const Coefficient& c) {
  if (e.size() != dim_) throw DimensionError("monomial dimension does not match support");
  if (c && *c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  if (!it->second || !c) {
    it->second = std::nullopt;
    return;
  }
  *it->second += *c;
  if (*it->second == 0) terms_.erase(it);
}

Coefficient Support::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) throw PreconditionError("monomial not in support");
  return it->second;
}

std::vector<Monomial> Support::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({e, c});
  return out;
}

std::vector<ExponentVector> Support::points() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& kv : terms_) out.push_back(kv.first);
  return out;
}

bool Support::all_concrete() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.has_value(); });
}

Support Support::restricted_to(std::span<const ExponentVector> pts) const {
  Support out(dim_);
  for (const ExponentVector& p : pts) {
    auto it = terms_.find(p);
    if (it != terms_.end()) out.terms_.emplace(it->first, it->second);
  }
  return out;
}

Support Support::derivative(std::size_t var) const {
  if (var >= dim_) throw DimensionError("derivative variable out of range");
  Support out(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    IntVec d = e.vec();
    d[var] -= 1;
    Coefficient dc;
    if (c) dc = *c * e[var];
    out.add(ExponentVector(d), dc);
  }
  return out;
}

Support Support::generic() const {
  Support out(dim_);
  for (const auto& kv : terms_) out.terms_.emplace(kv.first, std::nullopt);
  return out;
}

Support Support::instantiate(std::uint64_t seed) const {
  Rng rng(seed);
  Support out(dim_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c ? *c : draw_support_coefficient(rng));
  return out;
}

std::vector<std::string> variable_names(std::size_t dimension) {
  if (dimension == 2) return {"x", "y"};
  if (dimension == 3) return {"x", "y", "z"};
  throw DimensionError("dimension must be 2 or 3");
}

// ----------------------------------------------------------------- parser

namespace {

using Poly = std::map<ExponentVector, Rational>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ExponentVector e(ea.vec() + eb.vec());
      Rational& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

void accumulate(Poly& into, const Poly& p, int sign) {
  for (const auto& [e, c] : p) {
    Rational& slot = into[e];
    slot += sign > 0 ? c : Rational(-c);
    if (slot == 0) into.erase(e);
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  Poly parse() {
    Poly p = poly();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly constant(const Rational& c) const {
    Poly p;
    if (c != 0) p.emplace(ExponentVector(IntVec::zero(dim_)), c);
    return p;
  }

  Poly poly() {
    Poly result;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    accumulate(result, term(), sign);
    while (peek() == '+' || peek() == '-') {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      accumulate(result, term(), sign);
    }
    return result;
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, factor());
      } else if (c == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const std::int64_t d = nat();
        if (d == 0) throw ParseError("division by zero", at);
        for (auto& kv : acc) kv.second /= d;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
        acc = multiply(acc, factor());  // implicit product, e.g. "x^4y"
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Rational(nat()));
    if (c == '(') {
      ++pos_;
      Poly inner = poly();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::size_t var;
      if (c == 'x') var = 0;
      else if (c == 'y') var = 1;
      else if (c == 'z' && dim_ == 3) var = 2;
      else throw ParseError(std::string("unknown variable '") + c + "'", at);
      ++pos_;
      std::int64_t power = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        power = nat();
      }
      IntVec e = IntVec::zero(dim_);
      e[var] = power;
      Poly p;
      p.emplace(ExponentVector(e), Rational(1));
      return p;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::int64_t nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a natural number");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Support parse_polynomial(std::string_view text, std::size_t dimension) {
  Support out(dimension);
  Poly p;
  try {
    p = Parser(text, dimension).parse();
  } catch (const OverflowError&) {
    throw ParseError("number too large");
  }
  for (const auto& [e, c] : p) out.add(e, c);
  if (out.empty()) throw EmptySupportError();
  return out;
}

Support parse_support_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("monomials"))
    throw ParseError("JSON support needs \"vars\" and \"monomials\"");
  const auto& vars = j.at("vars");
  if (!vars.is_array()) throw ParseError("\"vars\" must be an array");
  const std::size_t dim = vars.size();
  if (dim != 2 && dim != 3) throw ParseError("\"vars\" must list 2 or 3 variables");
  const auto names = variable_names(dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (!vars[i].is_string() || vars[i].get<std::string>() != names[i])
      throw ParseError("\"vars\" must be [\"x\",\"y\"] or [\"x\",\"y\",\"z\"]");
  const auto& monos = j.at("monomials");
  if (!monos.is_array()) throw ParseError("\"monomials\" must be an array");
  Support out(dim);
  for (const auto& m : monos) {
    if (!m.is_object() || !m.contains("e")) throw ParseError("monomial needs an \"e\" array");
    const auto& e = m.at("e");
    if (!e.is_array() || e.size() != dim) throw ParseError("exponent array has wrong length");
    IntVec v = IntVec::zero(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!e[i].is_number_integer() || e[i].get<std::int64_t>() < 0)
        throw ParseError("exponents must be non-negative integers");
      v[i] = e[i].get<std::int64_t>();
    }
    Coefficient c;
    if (m.contains("c")) {
      const auto& cj = m.at("c");
      if (cj.is_string()) c = parse_rational(cj.get<std::string>());
      else if (cj.is_number_integer()) c = Rational(cj.get<std::int64_t>());
      else throw ParseError("coefficient must be a string \"p/q\" or an integer");
    }
    out.add(ExponentVector(v), c);
  }
  if (out.empty()) throw EmptySupportError();
  return out;
}

Support parse_input(std::string_view text, std::size_t dimension) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
    return parse_support_json(j);
  }
  return parse_polynomial(text, dimension);
}

// ---------------------------------------------------------- serialization

namespace {

std::string monomial_body(const ExponentVector& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string serialize_support(const Support& s) { return serialize_support(s, variable_names(s.dimension())); }

std::string serialize_support(const Support& s, const std::vector<std::string>& names) {
  if (names.size() != s.dimension()) throw DimensionError("one variable name per coordinate required");
  std::string out;
  bool first = true;
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string body = monomial_body(e, names);
    const bool negative = c && *c < 0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (!c) {
      out += body.empty() ? "1" : body;
      continue;
    }
    const Rational mag = negative ? Rational(-*c) : *c;
    std::string coeff;
    if (boost::multiprecision::denominator(mag) != 1) coeff = "(" + to_string(mag) + ")";
    else if (mag != 1 || body.empty()) coeff = to_string(mag);
    if (coeff.empty()) out += body;
    else if (body.empty()) out += coeff;
    else out += coeff + "*" + body;
  }
  return out;
}

nlohmann::json support_to_json(const Support& s) {
  nlohmann::json monos = nlohmann::json::array();
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    nlohmann::json m;
    m["e"] = std::vector<std::int64_t>(it->first.begin(), it->first.end());
    if (it->second) m["c"] = to_string(*it->second);
    monos.push_back(std::move(m));
  }
  return {{"vars", variable_names(s.dimension())}, {"monomials", std::move(monos)}};
}

}  // namespace newtloj
