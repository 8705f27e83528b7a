#include "gfc/complexio.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace gfc {

namespace {

bool parse_double_exact(const std::string& s, double* out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;  // from_chars rejects a leading plus
  if (first == last) return false;
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last && std::isfinite(*out);
}

// Index of the sign separating real and imaginary parts, or npos. The sign
// must not be leading and must not belong to an exponent.
std::size_t split_sign(const std::string& body) {
  for (std::size_t i = body.size(); i-- > 1;) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') return i;
  }
  return std::string::npos;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  if (text.empty()) throw ParseError("empty complex literal");
  if (text == "inf") throw ParseError("'inf' is not a finite complex scalar");
  double re = 0.0, im = 0.0;
  if (text.back() == 'i') {
    const std::string body = text.substr(0, text.size() - 1);
    if (body.empty()) throw ParseError("'" + text + "': imaginary part needs digits");
    const std::size_t cut = split_sign(body);
    if (cut == std::string::npos) {
      if (!parse_double_exact(body, &im))
        throw ParseError("'" + text + "' is not a complex literal");
    } else {
      const std::string re_part = body.substr(0, cut);
      const std::string im_part = body.substr(cut);
      if (im_part.size() < 2 || !parse_double_exact(re_part, &re) ||
          !parse_double_exact(im_part, &im))
        throw ParseError("'" + text + "' is not a complex literal");
    }
  } else {
    if (!parse_double_exact(text, &re))
      throw ParseError("'" + text + "' is not a complex literal");
  }
  return Complex(re, im);
}

SpherePoint parse_point(const std::string& text) {
  if (text == "inf") return SpherePoint::infinity();
  return SpherePoint(parse_complex(text));
}

std::string format_real(double x) {
  if (x == 0.0) return "0";  // collapses -0
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    double back = 0.0;
    if (parse_double_exact(buf, &back) && back == x) break;
  }
  return buf;
}

std::string format_complex(Complex z) {
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  if (im == 0.0) return format_real(re);
  if (re == 0.0) return format_real(im) + "i";
  std::string s = format_real(re);
  s += im < 0 ? '-' : '+';
  s += format_real(std::abs(im));
  s += 'i';
  return s;
}

std::string format_point(const SpherePoint& p, double eps) {
  if (p.is_infinity(eps)) return "inf";
  return format_complex(p.value());
}

}  // namespace gfc
