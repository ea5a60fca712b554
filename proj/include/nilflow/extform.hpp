#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "nilflow/rat.hpp"

namespace nilflow {

/// Constant-coefficient exterior p-form on the dual basis w_1..w_n.
/// Terms are keyed by strictly increasing index tuples; antisymmetry is
/// implicit in that representation.
class ExtForm {
 public:
  using IndexTuple = std::vector<int>;  // 1-based, strictly increasing
  using TermMap = std::map<IndexTuple, Rat>;

  ExtForm() : dim_(0), degree_(0) {}
  ExtForm(int dim, int degree);

  /// w_i.
  static ExtForm basis_one_form(int dim, int i);
  /// c * w_{i1} ^ ... ^ w_{ip}; indices in any order, sign handled.
  static ExtForm term(int dim, IndexTuple indices, const Rat& c);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Adds c on the (possibly unsorted) index tuple; repeated indices vanish.
  void add(const IndexTuple& indices, const Rat& c);

  /// Value on basis vectors (e_{i1},...,e_{ip}), determinant convention.
  Rat value(const IndexTuple& indices) const;

  ExtForm operator-() const;
  ExtForm& operator+=(const ExtForm& o);
  ExtForm& operator-=(const ExtForm& o);
  friend ExtForm operator+(ExtForm a, const ExtForm& b) { return a += b; }
  friend ExtForm operator-(ExtForm a, const ExtForm& b) { return a -= b; }
  ExtForm scaled(const Rat& c) const;

  friend ExtForm wedge(const ExtForm& a, const ExtForm& b);
  ExtForm wedge_power(unsigned k) const;

  friend bool operator==(const ExtForm& a, const ExtForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int dim_, degree_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const ExtForm& f);

}  // namespace nilflow
