#include "nilflow/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "nilflow/errors.hpp"

namespace nilflow {

int total_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool GrlexDesc::operator()(const Mono& a, const Mono& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic on exponent vectors, higher first
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw Error("Poly: variable index out of range");
  Mono m(nvars, 0);
  m[i - 1] = 1;
  return monomial(nvars, m, Rat(1));
}

Poly Poly::monomial(int nvars, Mono exps, const Rat& c) {
  if (static_cast<int>(exps.size()) != nvars) throw Error("Poly: exponent length mismatch");
  Poly p(nvars);
  p.add_term(exps, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

Rat Poly::coeff(const Mono& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::as_rat() const {
  if (!is_constant()) throw Error("Poly: not a constant");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

void Poly::add_term(const Mono& exps, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw Error("Poly: variable-count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw Error("Poly: variable-count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw Error("Poly: variable-count mismatch");
  Poly r(a.nvars_);
  Mono prod(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) prod[i] = ma[i] + mb[i];
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(nvars_, Rat(1));
  Poly base = *this;
  for (; e; e >>= 1) {
    if (e & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

Poly Poly::partial(int i) const {
  if (i < 1 || i > nvars_) throw Error("Poly: variable index out of range");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m[i - 1];
    if (e == 0) continue;
    Mono d = m;
    d[i - 1] = e - 1;
    r.add_term(d, c * Rat(e));
  }
  return r;
}

Poly Poly::integral(int i) const {
  if (i < 1 || i > nvars_) throw Error("Poly: variable index out of range");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Mono d = m;
    d[i - 1] += 1;
    r.add_term(d, c / Rat(d[i - 1]));
  }
  return r;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error("Poly: point size mismatch");
  Rat sum(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i] != 0) t *= point[i].pow(static_cast<unsigned>(m[i]));
    sum += t;
  }
  return sum;
}

double Poly::evaluate(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error("Poly: point size mismatch");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

Poly Poly::substituted(int i, const Rat& c) const {
  if (i < 1 || i > nvars_) throw Error("Poly: variable index out of range");
  Poly r(nvars_);
  for (const auto& [m, k] : terms_) {
    Mono d = m;
    const int e = d[i - 1];
    d[i - 1] = 0;
    r.add_term(d, k * c.pow(static_cast<unsigned>(e)));
  }
  return r;
}

Poly Poly::extended(int nvars) const {
  if (nvars < nvars_) throw Error("Poly: extended() shrinks variable count");
  Poly r(nvars);
  for (const auto& [m, c] : terms_) {
    Mono d = m;
    d.resize(nvars, 0);
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

Poly Poly::restricted(int nvars) const {
  if (nvars > nvars_) throw Error("Poly: restricted() grows variable count");
  Poly r(nvars);
  for (const auto& [m, c] : terms_) {
    for (int i = nvars; i < nvars_; ++i)
      if (m[i] != 0) throw Error("Poly: restricted() would drop a used variable");
    Mono d(m.begin(), m.begin() + nvars);
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

std::set<int> Poly::support_vars() const {
  std::set<int> vars;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      if (m[i] != 0) vars.insert(i + 1);
  return vars;
}

Poly Poly::divided_exact(const Poly& d) const {
  if (nvars_ != d.nvars_) throw Error("Poly: variable-count mismatch");
  if (d.is_zero()) throw Error("Poly: division by zero polynomial");
  Poly rem = *this;
  Poly quot(nvars_);
  const auto& [dm, dc] = *d.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.begin();
    Mono t(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      t[i] = rm[i] - dm[i];
      if (t[i] < 0) throw Error("Poly: inexact division");
    }
    const Poly piece = Poly::monomial(nvars_, t, rc / dc);
    quot += piece;
    rem -= piece * d;
  }
  return quot;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    num_gcd = g;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    den_lcm = l;
  }
  Rat scale = Rat(mpz_class(den_lcm)) / Rat(mpz_class(num_gcd));
  if ((terms_.begin()->second * scale).sign() < 0) scale = -scale;
  return scaled(scale);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Rat a = c.abs();
    std::string vars;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      os << a.str();
    } else if (a.is_one()) {
      os << vars;
    } else {
      os << a.str() << "*" << vars;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly integrate_exact_form(const std::vector<Poly>& s, const std::vector<int>& vars,
                          int nvars) {
  if (s.size() != vars.size()) throw Error("integrate_exact_form: length mismatch");
  std::vector<Poly> full(nvars, Poly(nvars));
  std::vector<bool> in_vars(nvars + 1, false);
  for (size_t k = 0; k < vars.size(); ++k) {
    const int i = vars[k];
    if (i < 1 || i > nvars) throw Error("integrate_exact_form: variable index out of range");
    if (in_vars[i]) throw Error("integrate_exact_form: duplicate variable index");
    if (s[k].nvars() != nvars) throw Error("integrate_exact_form: variable-count mismatch");
    in_vars[i] = true;
    full[i - 1] = s[k];
  }
  // Mixed partials must agree; components outside vars are identically zero.
  for (int i = 1; i <= nvars; ++i) {
    for (int j = i + 1; j <= nvars; ++j) {
      if (!(full[i - 1].partial(j) == full[j - 1].partial(i)))
        throw CompatibilityError("integrate_exact_form: d s_" + std::to_string(j) +
                                 "/dx_" + std::to_string(i) + " != d s_" +
                                 std::to_string(i) + "/dx_" + std::to_string(j));
    }
  }
  Poly f(nvars);
  for (int i = 1; i <= nvars; ++i) {
    if (!in_vars[i]) continue;
    f += (full[i - 1] - f.partial(i)).integral(i);
  }
  for (int i = 1; i <= nvars; ++i) {
    if (!(f.partial(i) == full[i - 1]))
      throw CompatibilityError("integrate_exact_form: reconstruction mismatch at x_" +
                               std::to_string(i));
  }
  return f;
}

}  // namespace nilflow
