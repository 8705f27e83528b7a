#pragma once

#include <string>

#include "gfc/sphere.hpp"

namespace gfc {

// Complex literal grammar used by the CLI and every file format:
//   inf | <real> | <real><sign><unsigned>i | <sign><unsigned>i
// e.g. "-6", "-2+1.4142135623730951i", "1i". No whitespace.

/// Throws ParseError; "inf" is rejected here (finite scalars only).
Complex parse_complex(const std::string& text);

/// Accepts the full grammar including "inf".
SpherePoint parse_point(const std::string& text);

std::string format_complex(Complex z);

std::string format_point(const SpherePoint& p, double eps = kDefaultEpsilon);

/// Shortest decimal that round-trips to exactly this double.
std::string format_real(double x);

}  // namespace gfc
