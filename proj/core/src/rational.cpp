#include "flowpoly/rational.hpp"

#include <ostream>

namespace flowpoly {

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw domain_error("Rational::parse: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw domain_error("Rational::parse: malformed rational '" + s + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace flowpoly
