#include "sdop/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace sdop {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  v.canonicalize();
  if (v.get_den() <= 0) throw std::invalid_argument("bad denominator: " + s);
  return Rat(v);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

long Rat::to_long() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  if (!v_.get_num().fits_slong_p()) throw std::overflow_error("integer overflow");
  return v_.get_num().get_si();
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  if (inv) return Rat(1) / acc;
  return acc;
}

}  // namespace sdop
