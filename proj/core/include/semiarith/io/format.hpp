#pragma once

#include "semiarith/field/quad_field.hpp"

#include <string>
#include <string_view>

namespace semiarith::io {

/// Shortest decimal that reads back to the same double (17 significant
/// digits at most).  Throws InvalidArgument for inf/nan.
std::string format_real(double v);

/// Strict decimal parse: the whole text must be consumed.
double parse_real(std::string_view text);

/// "Q" or "Q(sqrt d)".
std::string field_name(const field::QuadField& k);
field::QuadField parse_field_name(std::string_view text);

}  // namespace semiarith::io
