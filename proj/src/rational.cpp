#include "e7dirac/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace e7dirac {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : trim(text.substr(slash + 1));
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + to_string(q));
  const Integer& n = q.get_num();
  if (!n.fits_slong_p()) throw std::overflow_error("integer out of range: " + to_string(q));
  return static_cast<std::int64_t>(n.get_si());
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& o) {
  for (std::size_t i = 0; i < 8; ++i) coords[i] += o.coords[i];
  return *this;
}

AmbientVector& AmbientVector::operator-=(const AmbientVector& o) {
  for (std::size_t i = 0; i < 8; ++i) coords[i] -= o.coords[i];
  return *this;
}

AmbientVector& AmbientVector::operator*=(const Rational& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

bool AmbientVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

bool operator<(const AmbientVector& a, const AmbientVector& b) {
  for (std::size_t i = 0; i < 8; ++i) {
    int c = cmp(a.coords[i], b.coords[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

AmbientVector make_ambient(const std::array<long, 8>& numerators, long denominator) {
  AmbientVector v;
  for (std::size_t i = 0; i < 8; ++i) {
    v.coords[i] = Rational(Integer(numerators[i]), Integer(denominator));
    v.coords[i].canonicalize();
  }
  return v;
}

std::string to_string(const AmbientVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < 8; ++i) out << (i ? "," : "") << to_string(v.coords[i]);
  out << ')';
  return out.str();
}

std::string to_string(const Coords7& c) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < 7; ++i) out << (i ? "," : "") << to_string(c[i]);
  out << ']';
  return out.str();
}

}  // namespace e7dirac
