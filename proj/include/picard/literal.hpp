#pragma once

#include <string>

#include "picard/exactnum.hpp"

namespace picard {

/// Parse the exact literal grammar "a/b+c/d*sqrt(-d)" (every part optional,
/// signs allowed, the radicand must match the field). Examples: "3", "-1/2",
/// "2+3*sqrt(-5)", "1/2-1/2*sqrt(-3)", "sqrt(-2)".
FieldElement parse_field_element(const std::string& text, long d);

Rational parse_rational(const std::string& text);

/// Literal form accepted back by parse_field_element.
std::string format_field_element(const FieldElement& z);

}  // namespace picard
