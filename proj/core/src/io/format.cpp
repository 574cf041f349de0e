#include "semiarith/io/format.hpp"

#include "semiarith/errors.hpp"

#include <charconv>
#include <cmath>
#include <regex>

namespace semiarith::io {

std::string format_real(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("cannot format a non-finite value");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end)
    throw InvalidArgument("not a number: '" + std::string(text) + "'");
  return v;
}

std::string field_name(const field::QuadField& k) {
  return k.is_rational() ? "Q" : "Q(sqrt " + std::to_string(k.d()) + ")";
}

field::QuadField parse_field_name(std::string_view text) {
  static const std::regex pattern(R"(\s*Q\s*(?:\(\s*sqrt\s*\(?\s*([0-9]+)\s*\)?\s*\))?\s*)");
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern))
    throw InvalidArgument("unrecognised field '" + std::string(text) + "'");
  if (!m[1].matched) return field::QuadField(1);
  return field::QuadField(std::stoll(m[1].str()));
}

}  // namespace semiarith::io
