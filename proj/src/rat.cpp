#include "nilflow/rat.hpp"

#include <cctype>
#include <ostream>

#include "nilflow/errors.hpp"

namespace nilflow {

Rat::Rat(long num, long den) {
  if (den == 0) throw Error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(const std::string& s) {
  // Accept an optional sign, digits, and an optional "/digits" tail.
  auto digits = [](const std::string& t, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const size_t slash = s.find('/');
  const size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool ok;
  if (slash == std::string::npos) {
    ok = digits(s, start, s.size());
  } else {
    ok = digits(s, start, slash) && digits(s, slash + 1, s.size());
  }
  if (!ok) throw ParseError("Rat: cannot parse \"" + s + "\"");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("Rat: cannot parse \"" + s + "\"");
  if (sgn(q.get_den()) == 0) throw ParseError("Rat: zero denominator in \"" + s + "\"");
  q.canonicalize();
  return Rat(q);
}

Rat Rat::pow(unsigned e) const {
  Rat acc(1);
  Rat base = *this;
  for (; e; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

Rat Rat::inv() const {
  if (is_zero()) throw Error("Rat: inverse of zero");
  return Rat(1) / *this;
}

Rat Rat::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace nilflow
