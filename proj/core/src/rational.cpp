#include "ospcent/rational.hpp"

#include <ostream>

namespace ospcent {

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const {
  return q_.get_str();  // "p" or "p/q", canonical
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace ospcent
