#include "pellab/rational.hpp"

#include <cctype>
#include <string>

#include "pellab/error.hpp"

namespace pellab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  Rat r(negative ? BigInt(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_short_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return to_fraction_string(value);
}

std::optional<Rat> rational_root(const Rat& value, unsigned long m) {
  if (m == 0) return std::nullopt;
  if (m == 1) return value;
  const bool negative = sgn(value) < 0;
  if (negative && m % 2 == 0) return std::nullopt;
  BigInt num = abs(value.get_num());
  BigInt num_root;
  BigInt den_root;
  if (mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), m) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), value.get_den().get_mpz_t(), m) == 0) {
    return std::nullopt;
  }
  Rat r(negative ? BigInt(-num_root) : num_root, den_root);
  r.canonicalize();
  return r;
}

}  // namespace pellab
