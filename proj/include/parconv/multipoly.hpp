#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace parconv {

/// Sparse real polynomial in m variables, monomial basis.
///
/// Terms are kept sorted lexicographically by exponent vector with no
/// duplicates; construction merges and drops exact-zero coefficients.
class MultiPoly {
 public:
  struct Term {
    std::vector<unsigned> exp;  // length = num_vars
    double coef = 0.0;
  };

  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}
  MultiPoly(std::size_t num_vars, std::vector<Term> terms);

  static MultiPoly constant(std::size_t num_vars, double value);
  /// The monomial y_index (degree 1).
  static MultiPoly variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  double eval(const std::vector<double>& y) const;

  MultiPoly& add_term(const std::vector<unsigned>& exp, double coef);

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(double scalar) const;

 private:
  void normalize();

  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace parconv
