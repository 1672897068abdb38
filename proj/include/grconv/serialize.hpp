#pragma once

#include "grconv/code.hpp"

namespace grconv {

/// Machine format: one structured text document per code, listing
/// per-exponent coefficient matrices with bit-exact field elements
/// (coefficient vectors, constant term first).
std::string serialize_code(const ConvCode& code);
ConvCode parse_code(const std::string& text);

/// Structural equality over everything the machine format carries.
bool codes_equal(const ConvCode& a, const ConvCode& b);

}  // namespace grconv
