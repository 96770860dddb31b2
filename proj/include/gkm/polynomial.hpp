#ifndef GKM_POLYNOMIAL_HPP
#define GKM_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/weyl.hpp"

namespace gkm {

// Multivariate polynomial over Q in the simple-root linear forms
// x_1, ..., x_n (coordinates on t). Terms are kept in lexicographic
// exponent order with no zero coefficients.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : n_(nvars) {}

  static Polynomial constant(int nvars, const Rational &c);
  static Polynomial monomial(Exponents e, const Rational &c);
  // The linear form with the given simple-root coordinates.
  static Polynomial linear_form(const Root &r);
  static Polynomial linear_form(const RatVec &coords);

  int nvars() const { return n_; }
  const std::map<Exponents, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree; -1 for the zero polynomial

  Polynomial operator+(const Polynomial &o) const;
  Polynomial operator-(const Polynomial &o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial &o) const;
  Polynomial operator*(const Rational &c) const;
  Polynomial pow(int k) const;

  bool operator==(const Polynomial &o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial &o) const { return !(*this == o); }

  // Sorted term list, "coeff * x1^e1 x2^e2 + ...". "0" when zero.
  std::string str() const;

 private:
  int n_ = 0;
  std::map<Exponents, Rational> terms_;

  void add_term(const Exponents &e, const Rational &c);
};

// The algebra automorphism sending each linear coordinate form to its
// image under w, extended multiplicatively.
Polynomial weyl_act_poly(const WeylElement &w, const Polynomial &f);

// Reynolds operator (1/|W|) sum of w f; the output is W-invariant.
Polynomial symmetrize(const Polynomial &f, const WeylGroup &W);

// True iff f is fixed by every generator of W.
bool is_invariant(const Polynomial &f, const WeylGroup &W);

// Exact quotient q with f = lambda q, if it exists, by eliminating one
// variable with nonzero coefficient in lambda.
std::optional<Polynomial> divisible_by_linear(const Polynomial &f, const Root &lambda);

// The W-invariant quadratic (xi, xi) expressed in the coordinates x_i,
// i.e. x^T G^{-1} x for the gram matrix G.
Polynomial invariant_quadratic(const RootSystem &R);

}  // namespace gkm

#endif
