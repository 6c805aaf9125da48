#include "parconv/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace parconv {

MultiPoly::MultiPoly(std::size_t num_vars, std::vector<Term> terms)
    : num_vars_(num_vars), terms_(std::move(terms)) {
  normalize();
}

MultiPoly MultiPoly::constant(std::size_t num_vars, double value) {
  MultiPoly p(num_vars);
  p.add_term(std::vector<unsigned>(num_vars, 0u), value);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("MultiPoly::variable index");
  MultiPoly p(num_vars);
  std::vector<unsigned> exp(num_vars, 0u);
  exp[index] = 1u;
  p.add_term(exp, 1.0);
  return p;
}

unsigned MultiPoly::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (unsigned e : t.exp) s += e;
    d = std::max(d, s);
  }
  return d;
}

double MultiPoly::eval(const std::vector<double>& y) const {
  if (y.size() != num_vars_)
    throw std::invalid_argument("MultiPoly::eval dimension mismatch");
  double acc = 0.0;
  for (const auto& t : terms_) {
    double m = t.coef;
    for (std::size_t j = 0; j < num_vars_; ++j) {
      for (unsigned e = 0; e < t.exp[j]; ++e) m *= y[j];
    }
    acc += m;
  }
  return acc;
}

MultiPoly& MultiPoly::add_term(const std::vector<unsigned>& exp, double coef) {
  if (exp.size() != num_vars_)
    throw std::invalid_argument("MultiPoly::add_term exponent length");
  terms_.push_back(Term{exp, coef});
  normalize();
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("MultiPoly: mixed variable counts");
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return MultiPoly(num_vars_, std::move(all));
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  return *this + other * -1.0;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("MultiPoly: mixed variable counts");
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      Term t;
      t.exp.resize(num_vars_);
      for (std::size_t j = 0; j < num_vars_; ++j) t.exp[j] = a.exp[j] + b.exp[j];
      t.coef = a.coef * b.coef;
      prod.push_back(std::move(t));
    }
  }
  return MultiPoly(num_vars_, std::move(prod));
}

MultiPoly MultiPoly::operator*(double scalar) const {
  std::vector<Term> scaled = terms_;
  for (auto& t : scaled) t.coef *= scalar;
  return MultiPoly(num_vars_, std::move(scaled));
}

void MultiPoly::normalize() {
  std::map<std::vector<unsigned>, double> merged;
  for (auto& t : terms_) {
    if (t.exp.size() != num_vars_)
      throw std::invalid_argument("MultiPoly: exponent length mismatch");
    merged[t.exp] += t.coef;
  }
  terms_.clear();
  for (auto& [exp, coef] : merged) {
    if (coef != 0.0 && std::isfinite(coef)) terms_.push_back(Term{exp, coef});
    if (!std::isfinite(coef))
      throw std::invalid_argument("MultiPoly: non-finite coefficient");
  }
}

}  // namespace parconv
