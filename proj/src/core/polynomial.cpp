#include "gkm/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

void Polynomial::add_term(const Exponents &e, const Rational &c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(int nvars, const Rational &c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(Exponents e, const Rational &c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear_form(const Root &r) {
  Polynomial p(static_cast<int>(r.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    if (r.c[i] == 0) continue;
    Exponents e(r.c.size(), 0);
    e[i] = 1;
    p.add_term(e, Rational(r.c[i]));
  }
  return p;
}

Polynomial Polynomial::linear_form(const RatVec &coords) {
  Polynomial p(static_cast<int>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    Exponents e(coords.size(), 0);
    e[i] = 1;
    p.add_term(e, coords[i]);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto &[e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
  Polynomial out = *this;
  for (const auto &[e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial &o) const {
  Polynomial out = *this;
  for (const auto &[e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(n_);
  for (const auto &[e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
  Polynomial out(n_);
  Exponents e(n_);
  for (const auto &[e1, c1] : terms_)
    for (const auto &[e2, c2] : o.terms_) {
      for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

Polynomial Polynomial::operator*(const Rational &c) const {
  Polynomial out(n_);
  if (c == 0) return out;
  for (const auto &[e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial out = constant(n_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    bool any = false;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      os << (any ? " " : " * ") << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      any = true;
    }
  }
  return os.str();
}

Polynomial weyl_act_poly(const WeylElement &w, const Polynomial &f) {
  const int n = f.nvars();
  // Images of the coordinate forms: w alpha_j has coordinates in column j.
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) {
    Root col;
    col.c.resize(n);
    for (int i = 0; i < n; ++i) col.c[i] = static_cast<int>(w.matrix[i][j]);
    images.push_back(Polynomial::linear_form(col));
  }
  Polynomial out(n);
  for (const auto &[e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (int j = 0; j < n; ++j)
      if (e[j] > 0) term = term * images[j].pow(e[j]);
    out = out + term;
  }
  return out;
}

Polynomial symmetrize(const Polynomial &f, const WeylGroup &W) {
  Polynomial sum(f.nvars());
  for (const WeylElement &w : W.elements) sum = sum + weyl_act_poly(w, f);
  return sum * rat(1, static_cast<long>(W.order()));
}

bool is_invariant(const Polynomial &f, const WeylGroup &W) {
  for (const WeylElement &g : W.generators)
    if (weyl_act_poly(g, f) != f) return false;
  return true;
}

std::optional<Polynomial> divisible_by_linear(const Polynomial &f, const Root &lambda) {
  const int n = f.nvars();
  if (lambda.is_zero()) throw spec_error("divisible_by_linear: lambda must be nonzero");

  int pivot = -1;
  for (int i = 0; i < n; ++i)
    if (lambda.c[i] != 0) { pivot = i; break; }
  const Rational pc(lambda.c[pivot]);

  // View f in Q[x_other][x_pivot] and divide by (pc x_pivot + rest); the
  // leading coefficient is a nonzero constant, so the division is exact
  // whenever the remainder vanishes.
  Polynomial rest = Polynomial::linear_form(lambda);
  {
    Polynomial::Exponents e(n, 0);
    e[pivot] = 1;
    rest = rest - Polynomial::monomial(e, pc);
  }

  std::map<int, Polynomial> slices;  // pivot degree -> coefficient poly
  int maxdeg = 0;
  for (const auto &[e, c] : f.terms()) {
    int d = e[pivot];
    Polynomial::Exponents base = e;
    base[pivot] = 0;
    auto it = slices.find(d);
    if (it == slices.end()) it = slices.emplace(d, Polynomial(n)).first;
    it->second = it->second + Polynomial::monomial(base, c);
    maxdeg = std::max(maxdeg, d);
  }
  auto slice = [&](int d) -> Polynomial {
    auto it = slices.find(d);
    return it == slices.end() ? Polynomial(n) : it->second;
  };

  Polynomial quotient(n);
  Polynomial carry(n);  // correction flowing into the current slice
  for (int d = maxdeg; d >= 1; --d) {
    Polynomial qd = (slice(d) + carry) * (Rational(1) / pc);
    Polynomial::Exponents e(n, 0);
    e[pivot] = d - 1;
    quotient = quotient + Polynomial::monomial(e, Rational(1)) * qd;
    carry = -(qd * rest);
  }
  Polynomial remainder = slice(0) + carry;
  if (!remainder.is_zero()) return std::nullopt;
  return quotient;
}

Polynomial invariant_quadratic(const RootSystem &R) {
  const int n = R.rank();
  // Invert the gram matrix exactly.
  std::vector<RatVec> m(n, RatVec(n)), inv(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    inv[i][i] = 1;
    for (int j = 0; j < n; ++j) m[i][j] = Rational(R.gram[i][j]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw invariant_error("gram matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = m[col][col];
    for (int j = 0; j < n; ++j) { m[col][j] /= p; inv[col][j] /= p; }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = 0; j < n; ++j) { m[r][j] -= f * m[col][j]; inv[r][j] -= f * inv[col][j]; }
    }
  }
  Polynomial q(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (inv[i][j] == 0) continue;
      Polynomial::Exponents e(n, 0);
      e[i] += 1;
      e[j] += 1;
      q = q + Polynomial::monomial(e, inv[i][j]);
    }
  return q;
}

}  // namespace gkm
