#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nilflow/rat.hpp"

namespace nilflow {

/// Exponent vector, one entry per variable (dense per term).
using Mono = std::vector<int>;

int total_degree(const Mono& m);

/// Graded-lexicographic order, descending: the map's first term is the
/// leading term, and iteration order is the canonical display order.
struct GrlexDesc {
  bool operator()(const Mono& a, const Mono& b) const;
};

/// Sparse multivariate polynomial in x_1..x_n with exact rational
/// coefficients. No zero coefficients are ever stored.
class Poly {
 public:
  using TermMap = std::map<Mono, Rat, GrlexDesc>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  /// x_i, 1-based.
  static Poly variable(int nvars, int i);
  static Poly monomial(int nvars, Mono exps, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // -1 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  /// Coefficient of the given exponent vector (zero if absent).
  Rat coeff(const Mono& exps) const;
  /// The unique Rat value of a degree-<=0 polynomial.
  Rat as_rat() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rat& c) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Formal partial derivative with respect to x_i (1-based).
  Poly partial(int i) const;
  /// Formal antiderivative in x_i with zero integration constant.
  Poly integral(int i) const;

  Rat evaluate(const std::vector<Rat>& point) const;
  double evaluate(const std::vector<double>& point) const;

  /// Substitute x_i := c, keeping the variable count.
  Poly substituted(int i, const Rat& c) const;

  /// Embed into a larger variable count (new variables unused).
  Poly extended(int nvars) const;
  /// Drop trailing variables; throws if any dropped variable is used.
  Poly restricted(int nvars) const;

  /// 1-based indices of variables that actually occur.
  std::set<int> support_vars() const;

  /// Exact quotient *this / d; throws Error when the division is not exact.
  Poly divided_exact(const Poly& d) const;

  /// Integer-primitive scaling: coefficients made coprime integers with a
  /// positive leading coefficient. Zero stays zero.
  Poly primitive() const;

  /// Canonical text: terms in descending graded-lex order, "p/q" coefficients.
  std::string str() const;

 private:
  void add_term(const Mono& exps, const Rat& c);

  int nvars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Reconstructs F with partial(F, i) == s[i] for each 1-based i in vars and
/// all other partials zero; the integration constant is fixed to zero.
/// Throws CompatibilityError when s is not an exact gradient.
Poly integrate_exact_form(const std::vector<Poly>& s, const std::vector<int>& vars,
                          int nvars);

}  // namespace nilflow
