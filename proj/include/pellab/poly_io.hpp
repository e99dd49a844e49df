#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pellab/poly.hpp"

namespace pellab {

/// Canonical human form with explicit signs, highest degree first:
/// "t^4 - 2*t^2 + 1", "-1/2*t + 3", "0".
std::string to_string(const Poly& p, char var = 't');

/// Parses sums of terms "c", "c*t", "c t^k", "t^k" where c is an integer or a
/// fraction. A single-letter variable is accepted; mixing two letters is an
/// error. Throws Error(Parse) with the offending byte offset in the message.
Poly parse_poly(std::string_view text);

/// Lossless form: array of "num/den" strings from degree 0 upward.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace pellab
