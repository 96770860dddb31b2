#include "gkm/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

bool WeylElement::is_identity() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (matrix[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

Root WeylElement::apply(const Root &v) const {
  const int n = dim();
  Root out;
  out.c.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    long s = 0;
    for (int j = 0; j < n; ++j) s += matrix[i][j] * v.c[j];
    out.c[i] = static_cast<int>(s);
  }
  return out;
}

RatVec WeylElement::apply(const RatVec &v) const {
  const int n = dim();
  RatVec out(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += Rational(matrix[i][j]) * v[j];
  return out;
}

WeylElement WeylElement::compose(const WeylElement &other) const {
  const int n = dim();
  WeylElement out;
  out.matrix.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long a = matrix[i][k];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) out.matrix[i][j] += a * other.matrix[k][j];
    }
  out.length = -1;  // unknown; canonical copies live in WeylGroup::elements
  return out;
}

WeylElement WeylElement::inverse() const {
  const int n = dim();
  // Exact Gauss-Jordan; Weyl matrices are unimodular, so the result is integral.
  std::vector<RatVec> m(n, RatVec(n)), inv(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    inv[i][i] = 1;
    for (int j = 0; j < n; ++j) m[i][j] = Rational(matrix[i][j]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw invariant_error("singular Weyl matrix");
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
  WeylElement out;
  out.matrix.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (inv[i][j].get_den() != 1) throw invariant_error("non-integral Weyl matrix inverse");
      out.matrix[i][j] = inv[i][j].get_num().get_si();
    }
  out.length = length;  // l(w) = l(w^-1)
  return out;
}

bool WeylElement::operator<(const WeylElement &o) const { return matrix < o.matrix; }

WeylElement WeylElement::identity(int n) {
  WeylElement w;
  w.matrix.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) w.matrix[i][i] = 1;
  w.length = 0;
  return w;
}

size_t WeylGroup::index_of(const WeylElement &w) const {
  auto cmp = [this](size_t a, const WeylElement &b) { return elements[a].matrix < b.matrix; };
  auto it = std::lower_bound(by_matrix_.begin(), by_matrix_.end(), w, cmp);
  if (it == by_matrix_.end() || !(elements[*it] == w))
    throw invariant_error("element is not a member of this Weyl group");
  return *it;
}

bool WeylGroup::contains(const WeylElement &w) const {
  auto cmp = [this](size_t a, const WeylElement &b) { return elements[a].matrix < b.matrix; };
  auto it = std::lower_bound(by_matrix_.begin(), by_matrix_.end(), w, cmp);
  return it != by_matrix_.end() && elements[*it] == w;
}

int inversion_count(const RootSystem &R, const WeylElement &w) {
  int count = 0;
  for (const Root &beta : R.all_roots)
    if (beta.is_positive() && !w.apply(beta).is_positive()) ++count;
  return count;
}

WeylGroup generate_from(const RootSystem &R, const std::vector<Root> &roots) {
  const int n = R.rank();
  WeylGroup G;
  for (const Root &r : roots) {
    G.generator_roots.push_back(r);
    G.generators.push_back(reflection_of(R, r));
  }

  std::map<std::vector<std::vector<long>>, int> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(n)};
  seen[frontier[0].matrix] = 0;
  std::vector<WeylElement> all = frontier;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement &w : frontier)
      for (const WeylElement &g : G.generators) {
        WeylElement m = w.compose(g);
        if (seen.emplace(m.matrix, 0).second) {
          next.push_back(m);
          all.push_back(m);
        }
      }
    frontier = std::move(next);
  }
  for (WeylElement &w : all) w.length = inversion_count(R, w);
  std::sort(all.begin(), all.end(), [](const WeylElement &a, const WeylElement &b) {
    if (a.length != b.length) return a.length < b.length;
    return a.matrix < b.matrix;
  });
  G.elements = std::move(all);
  G.by_matrix_.resize(G.elements.size());
  for (size_t i = 0; i < G.elements.size(); ++i) G.by_matrix_[i] = i;
  std::sort(G.by_matrix_.begin(), G.by_matrix_.end(),
            [&G](size_t a, size_t b) { return G.elements[a].matrix < G.elements[b].matrix; });
  return G;
}

WeylGroup generate_weyl(const RootSystem &R) {
  if (R.rank() > 6)
    throw spec_error("Weyl group generation is limited to rank <= 6 (" + R.datum.name() +
                     " has rank " + std::to_string(R.rank()) + ")");
  return generate_from(R, R.simples);
}

WeylElement reflection_of(const RootSystem &R, const Root &beta) {
  if (!R.contains(beta)) throw spec_error("reflection_of: " + beta.str() + " is not a root");
  const int n = R.rank();
  WeylElement w = WeylElement::identity(n);
  for (int j = 0; j < n; ++j) {
    long k = cartan_int(R, R.simples[j], beta);  // <alpha_j, beta>
    for (int i = 0; i < n; ++i) w.matrix[i][j] -= k * beta.c[i];
  }
  w.length = inversion_count(R, w);
  return w;
}

WeylGroup subgroup_from(const RootSystem &R, const Subsystem &deltaK) {
  std::vector<Root> gens;
  for (const Root &r : deltaK.roots)
    if (r.is_positive()) gens.push_back(r);
  return generate_from(R, gens);
}

CosetSpace cosets(const WeylGroup &W, const WeylGroup &WK) {
  for (const WeylElement &u : WK.elements)
    if (!W.contains(u)) throw spec_error("cosets: WK is not a subgroup of W");
  if (W.order() % WK.order() != 0)
    throw invariant_error("cosets: |WK| does not divide |W|");

  CosetSpace cs;
  cs.group = &W;
  cs.subgroup = &WK;
  cs.element_to_coset_.assign(W.order(), SIZE_MAX);
  for (size_t i = 0; i < W.order(); ++i) {
    if (cs.element_to_coset_[i] != SIZE_MAX) continue;
    size_t k = cs.representatives.size();
    cs.representatives.push_back(W.elements[i]);
    // Canonical element order makes the first unassigned member the
    // minimal-length, lexicographically-least representative of its coset.
    for (const WeylElement &u : WK.elements)
      cs.element_to_coset_[W.index_of(W.elements[i].compose(u))] = k;
  }
  return cs;
}

size_t CosetSpace::coset_of(const WeylElement &w) const {
  return element_to_coset_[group->index_of(w)];
}

std::vector<int> reduced_word(const RootSystem &R, const WeylElement &w) {
  std::vector<int> suffix;
  WeylElement cur = w;
  int guard = 0;
  while (!cur.is_identity()) {
    if (++guard > 10000) throw invariant_error("reduced_word: descent did not terminate");
    bool found = false;
    for (int i = 0; i < R.rank(); ++i) {
      if (!cur.apply(R.simples[i]).is_positive()) {
        suffix.push_back(i + 1);
        cur = cur.compose(reflection_of(R, R.simples[i]));
        found = true;
        break;
      }
    }
    if (!found) throw invariant_error("reduced_word: non-identity element with no descent");
  }
  std::reverse(suffix.begin(), suffix.end());
  return suffix;
}

std::string word_str(const RootSystem &R, const WeylElement &w) {
  std::vector<int> word = reduced_word(R, w);
  if (word.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << 's' << word[i];
  }
  return os.str();
}

}  // namespace gkm
