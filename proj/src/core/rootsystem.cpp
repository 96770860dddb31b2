#include "gkm/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

CartanDatum CartanDatum::parse(const std::string &name) {
  if (name.size() < 2) throw spec_error("Cartan type must look like 'A2', 'E6': got '" + name + "'");
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw spec_error("Cartan type must look like 'A2', 'E6': got '" + name + "'");
  CartanDatum d;
  d.family = fam;
  d.rank = std::stoi(name.substr(1));
  d.validate();
  return d;
}

void CartanDatum::validate() const {
  auto fail = [&] {
    throw spec_error("invalid Cartan type " + name() +
                     " (admissible: A>=1, B>=2, C>=2, D>=3, E6/E7/E8, F4, G2)");
  };
  switch (family) {
    case 'A': if (rank < 1) fail(); break;
    case 'B': if (rank < 2) fail(); break;
    case 'C': if (rank < 2) fail(); break;
    case 'D': if (rank < 3) fail(); break;
    case 'E': if (rank < 6 || rank > 8) fail(); break;
    case 'F': if (rank != 4) fail(); break;
    case 'G': if (rank != 2) fail(); break;
    default: fail();
  }
}

std::string CartanDatum::name() const { return std::string(1, family) + std::to_string(rank); }

Root Root::operator-() const {
  Root r(*this);
  for (auto &x : r.c) x = -x;
  return r;
}

Root Root::operator+(const Root &o) const {
  Root r(*this);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

bool Root::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Root::is_positive() const {
  for (int x : c)
    if (x != 0) return x > 0;
  return false;
}

std::string Root::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

bool Subsystem::contains(const Root &r) const {
  return std::binary_search(roots.begin(), roots.end(), r);
}

long RootSystem::inner(const Root &x, const Root &y) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += static_cast<long>(x.c[i]) * gram[i][j] * y.c[j];
  }
  return s;
}

Rational RootSystem::inner(const Root &x, const RatVec &y) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += Rational(static_cast<long>(x.c[i]) * gram[i][j]) * y[j];
  }
  return s;
}

Rational RootSystem::inner(const RatVec &x, const RatVec &y) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += x[i] * Rational(gram[i][j]) * y[j];
  return s;
}

bool RootSystem::contains(const Root &r) const {
  return std::binary_search(all_roots.begin(), all_roots.end(), r);
}

size_t RootSystem::index_of(const Root &r) const {
  auto it = std::lower_bound(all_roots.begin(), all_roots.end(), r);
  if (it == all_roots.end() || !(*it == r))
    throw invariant_error("vector " + r.str() + " is not a root of " + datum.name());
  return static_cast<size_t>(it - all_roots.begin());
}

RatVec RootSystem::rho() const {
  RatVec v(rank(), Rational(0));
  for (const Root &r : all_roots)
    if (r.is_positive())
      for (int i = 0; i < rank(); ++i) v[i] += rat(r.c[i], 2);
  return v;
}

std::vector<Root> RootSystem::positive_roots() const {
  std::vector<Root> out;
  for (const Root &r : all_roots)
    if (r.is_positive()) out.push_back(r);
  return out;
}

namespace {

// Solves G x = b exactly over the rationals (G the gram matrix).
RatVec solve_gram(const std::vector<std::vector<long>> &gram, RatVec b) {
  const int n = static_cast<int>(b.size());
  std::vector<RatVec> m(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rational(gram[i][j]);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw invariant_error("gram matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      b[r] -= f * b[col];
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

}  // namespace

RatVec RootSystem::fundamental_weight(int i) const {
  if (i < 1 || i > rank()) throw spec_error("fundamental weight index out of range");
  // <w, alpha_j> = delta_ij  <=>  (w, alpha_j) = d_j delta_ij with d_j = |alpha_j|^2/2.
  RatVec b(rank(), Rational(0));
  b[i - 1] = rat(gram[i - 1][i - 1], 2);
  return solve_gram(gram, b);
}

namespace {

struct DynkinData {
  std::vector<long> d;                      // d_i = |alpha_i|^2 / 2
  std::vector<std::pair<int, int>> edges;   // 0-based bonds
};

// Simple-root conventions: the short simple root of B_n comes first,
// matching the labelling used for the B2 worked cases; C_n carries its long
// root last; A, D, E, F, G follow the usual numbering.
DynkinData dynkin_data(const CartanDatum &dat) {
  const int n = dat.rank;
  DynkinData dd;
  dd.d.assign(n, 1);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) dd.edges.emplace_back(i, i + 1);
  };
  switch (dat.family) {
    case 'A':
      chain(0, n - 1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) dd.d[i] = 2;
      chain(0, n - 1);
      break;
    case 'C':
      dd.d[n - 1] = 2;
      chain(0, n - 1);
      break;
    case 'D':
      chain(0, n - 2);
      dd.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      dd.edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      if (n >= 7) dd.edges.emplace_back(5, 6);
      if (n == 8) dd.edges.emplace_back(6, 7);
      break;
    case 'F':
      dd.d = {2, 2, 1, 1};
      chain(0, 3);
      break;
    case 'G':
      dd.d = {1, 3};
      chain(0, 1);
      break;
  }
  return dd;
}

}  // namespace

RootSystem build_root_system(const CartanDatum &datum) {
  datum.validate();
  const int n = datum.rank;
  RootSystem R;
  R.datum = datum;

  DynkinData dd = dynkin_data(datum);
  R.gram.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) R.gram[i][i] = 2 * dd.d[i];
  for (auto [i, j] : dd.edges) {
    long g = -std::max(dd.d[i], dd.d[j]);
    R.gram[i][j] = R.gram[j][i] = g;
  }

  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    R.simples.emplace_back(std::move(c));
  }

  // Closure of the simples under simple reflections reaches every root.
  std::set<Root> roots(R.simples.begin(), R.simples.end());
  std::vector<Root> queue(R.simples.begin(), R.simples.end());
  while (!queue.empty()) {
    Root r = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      long num = 0;
      for (int j = 0; j < n; ++j) num += R.gram[i][j] * r.c[j];  // (r, alpha_i)
      long den = dd.d[i];
      if (num % den != 0)
        throw invariant_error("non-integral Cartan pairing while generating " + datum.name());
      long k = num / den;  // <r, alpha_i>
      Root s = r;
      s.c[i] -= static_cast<int>(k);
      if (roots.insert(s).second) queue.push_back(s);
    }
  }
  R.all_roots.assign(roots.begin(), roots.end());
  return R;
}

long cartan_int(const RootSystem &R, const Root &gamma, const Root &beta) {
  if (beta.is_zero()) throw invariant_error("cartan_int: beta must be nonzero");
  long num = 2 * R.inner(gamma, beta);
  long den = R.inner(beta, beta);
  if (num % den != 0)
    throw invariant_error("cartan_int: 2(" + gamma.str() + "," + beta.str() +
                          ") is not divisible by |" + beta.str() + "|^2");
  return num / den;
}

Root reflect(const RootSystem &R, const Root &beta, const Root &v) {
  long k = cartan_int(R, v, beta);
  Root out = v;
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] -= static_cast<int>(k * beta.c[i]);
  return out;
}

RatVec reflect(const RootSystem &R, const Root &beta, const RatVec &v) {
  Rational k = Rational(2) * R.inner(beta, v) / Rational(R.inner(beta, beta));
  RatVec out = v;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= k * Rational(beta.c[i]);
  return out;
}

Subsystem close_subsystem(const std::vector<Root> &generators, const RootSystem &R) {
  std::set<Root> s;
  for (const Root &g : generators) {
    if (!R.contains(g)) throw spec_error("subsystem generator " + g.str() + " is not a root");
    s.insert(g);
    s.insert(-g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Root> cur(s.begin(), s.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i; j < cur.size(); ++j) {
        Root sum = cur[i] + cur[j];
        if (sum.is_zero() || !R.contains(sum)) continue;
        if (s.insert(sum).second) {
          s.insert(-sum);
          grew = true;
        }
      }
  }
  Subsystem out;
  out.roots.assign(s.begin(), s.end());
  return out;
}

Subsystem complement(const Subsystem &deltaK, const RootSystem &R) {
  Subsystem out;
  for (const Root &r : R.all_roots)
    if (!deltaK.contains(r)) out.roots.push_back(r);
  return out;
}

bool is_regular(const Covector &xi, const RootSystem &R) {
  if (static_cast<int>(xi.coords.size()) != R.rank()) return false;
  for (const Root &r : R.all_roots)
    if (R.inner(r, xi.coords) == 0) return false;
  return true;
}

}  // namespace gkm
