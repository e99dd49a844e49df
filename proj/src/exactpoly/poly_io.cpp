#include "pellab/poly_io.hpp"

#include <cctype>
#include <string>

#include "pellab/error.hpp"

namespace pellab {

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (sgn(c[i]) == 0) continue;
    const bool negative = sgn(c[i]) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rat mag = abs(c[i]);
    if (i == 0) {
      out += to_short_string(mag);
      continue;
    }
    if (mag != 1) out += to_short_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Poly acc;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += parse_term() * Rat(sign);
      first = false;
    }
    return acc;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse,
                "polynomial parse error at position " + std::to_string(pos_) + ": " + why);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly parse_term() {
    Rat coef = 1;
    bool have_coef = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        den = digits();
        if (den.empty()) fail("expected denominator");
      }
      coef = parse_rational(num + "/" + den);
      have_coef = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
          fail("expected variable after '*'");
        }
      }
    }
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      const char v = peek();
      if (var_ != '\0' && v != var_) fail("mixed variables");
      var_ = v;
      ++pos_;
      skip_ws();
      std::size_t exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        const std::string e = digits();
        if (e.empty()) fail("expected exponent");
        if (e.size() > 6) fail("exponent too large");
        exponent = std::stoul(e);
      }
      return Poly::monomial(coef, exponent);
    }
    if (!have_coef) fail("expected coefficient or variable");
    return Poly::constant(coef);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  char var_ = '\0';
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_fraction_string(c));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "polynomial JSON must be an array");
  std::vector<Rat> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_string()) {
      coeffs.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      coeffs.emplace_back(item.get<long>());
    } else {
      throw Error(ErrorCode::Parse, "polynomial coefficient must be a \"num/den\" string");
    }
  }
  return Poly(std::move(coeffs));
}

}  // namespace pellab
