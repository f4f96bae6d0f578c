#include "assocforge/rational.hpp"

#include <stdexcept>

namespace assocforge {

std::string fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

}  // namespace assocforge
