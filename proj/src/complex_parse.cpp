#include "singular_weyl/complex_parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "singular_weyl/errors.hpp"

namespace sw {

namespace {

[[noreturn]] void bad(const std::string& text) {
  throw DomainError("cannot parse complex value '" + text + "' (expected e.g. 0+0.5i, -0.25, 0.5i)");
}

// Parses one real number from s[pos..end); a bare sign is allowed when
// followed by 'i' and stands for ±1.
double parse_real(const std::string& text, std::size_t begin, std::size_t end, bool allow_unit) {
  if (begin == end) {
    if (allow_unit) return 1.0;
    bad(text);
  }
  double sign = 1.0;
  std::size_t p = begin;
  if (text[p] == '+' || text[p] == '-') {
    if (text[p] == '-') sign = -1.0;
    ++p;
  }
  if (p == end) {
    if (allow_unit) return sign;
    bad(text);
  }
  if (text[p] == '+' || text[p] == '-') bad(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data() + p, text.data() + end, value);
  if (ec != std::errc() || ptr != text.data() + end) bad(text);
  return sign * value;
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text == "schrodinger" || text == "heat") return s_preset(text);
  if (text.empty()) bad(raw);
  if (text.back() != 'i') return {parse_real(text, 0, text.size(), false), 0.0};

  // Split at the last sign that is not the leading one or part of an exponent.
  const std::size_t body = text.size() - 1;
  std::size_t split = std::string::npos;
  for (std::size_t p = body; p-- > 1;) {
    if ((text[p] == '+' || text[p] == '-') && text[p - 1] != 'e' && text[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(text, 0, body, true)};
  return {parse_real(text, 0, split, false), parse_real(text, split, body, true)};
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace sw
