#include "symtensor/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace symtensor {

namespace {

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << r; // GMP canonical form p/q, q omitted when 1
  return os.str();
}

// Reads "[+-]p[/q]" starting at pos; advances pos past the literal.
Rational read_rational(const std::string& s, size_t& pos) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  size_t start = pos; // GMP rejects a leading '+', so keep digits only
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digits in rational literal: '" + s + "'");
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_begin) throw ParseError("expected denominator digits: '" + s + "'");
  }
  try {
    const Rational magnitude(s.substr(start, pos - start));
    return negative ? Rational(-magnitude) : magnitude;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: '" + s.substr(start, pos - start) + "'");
  }
}

} // namespace

std::string format(const GaussianRational& z) {
  if (z.imag() == 0) return format_rational(z.real());
  std::string im = format_rational(z.imag());
  if (z.real() == 0) return im + "i";
  if (!im.empty() && im[0] != '-') im.insert(im.begin(), '+');
  return format_rational(z.real()) + im + "i";
}

GaussianRational parse_gaussian_rational(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");

  size_t pos = 0;
  Rational first = read_rational(s, pos);
  if (pos == s.size()) return GaussianRational(first);
  if (s[pos] == 'i' && pos + 1 == s.size()) return GaussianRational(Rational(0), first);
  if (s[pos] != '+' && s[pos] != '-')
    throw ParseError("trailing characters in rational literal: '" + text + "'");
  Rational second = read_rational(s, pos);
  if (pos == s.size() || s[pos] != 'i' || pos + 1 != s.size())
    throw ParseError("imaginary part must end in 'i': '" + text + "'");
  return GaussianRational(first, second);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << format(z);
}

} // namespace symtensor
