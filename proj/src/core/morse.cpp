#include "gkm/morse.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gkm/errors.hpp"

namespace gkm {

Orientation::Orientation(const AxialFunction &a, Covector xi)
    : axial_(&a), xi_(std::move(xi)) {
  if (!is_regular(xi_, *a.graph().roots))
    throw spec_error("orientation requires a regular xi");
}

bool Orientation::up(const OrientedEdge &e) const {
  const RootSystem &R = *axial_->graph().roots;
  return R.inner(axial_->value(e), xi_.coords) > 0;
}

long BettiVector::sum() const { return std::accumulate(counts.begin(), counts.end(), 0L); }

bool BettiVector::palindromic() const {
  std::vector<long> rev(counts.rbegin(), counts.rend());
  return rev == counts;
}

int index(const Orientation &o, size_t v) {
  int down = 0;
  for (const OrientedEdge &e : o.axial().graph().edges_at(v))
    if (!o.up(e)) ++down;
  return down;
}

BettiVector betti(const Orientation &o) {
  const GKMGraph &g = o.axial().graph();
  BettiVector b;
  b.counts.assign(g.degree() + 1, 0);
  for (size_t v = 0; v < g.vertex_count(); ++v) ++b.counts[index(o, v)];
  return b;
}

bool betti_invariance(const AxialFunction &a, const std::vector<Covector> &xis) {
  const RootSystem &R = *a.graph().roots;
  std::string bad;
  for (size_t i = 0; i < xis.size(); ++i)
    if (!is_regular(xis[i], R)) bad += (bad.empty() ? "" : ", ") + std::to_string(i);
  if (!bad.empty()) throw spec_error("irregular xi at indices " + bad);

  std::optional<BettiVector> first;
  for (const Covector &xi : xis) {
    BettiVector b = betti(Orientation(a, xi));
    if (!first)
      first = b;
    else if (!(b == *first))
      return false;
  }
  return true;
}

MorseResult find_morse(const Orientation &o) {
  const GKMGraph &g = o.axial().graph();
  const size_t nv = g.vertex_count();

  // Upward multigraph; parallel arcs are kept (multi-edges are real).
  std::vector<std::vector<size_t>> out_arcs(nv), in_arcs(nv);
  for (size_t v = 0; v < nv; ++v)
    for (const OrientedEdge &e : g.edges_at(v))
      if (o.up(e)) {
        size_t t = g.target(e);
        out_arcs[v].push_back(t);
        in_arcs[t].push_back(v);
      }

  // Kahn's algorithm with longest-path ranks.
  std::vector<size_t> indeg(nv);
  std::vector<long> rank(nv, 0);
  std::vector<size_t> stack;
  for (size_t v = 0; v < nv; ++v) {
    indeg[v] = in_arcs[v].size();
    if (indeg[v] == 0) stack.push_back(v);
  }
  size_t removed = 0;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    ++removed;
    for (size_t t : out_arcs[v]) {
      rank[t] = std::max(rank[t], rank[v] + 1);
      if (--indeg[t] == 0) stack.push_back(t);
    }
  }

  MorseResult res;
  if (removed == nv) {
    MorseAssignment m;
    m.values.reserve(nv);
    for (size_t v = 0; v < nv; ++v) m.values.emplace_back(rank[v]);
    res.assignment = std::move(m);
    return res;
  }

  // Extract a witness cycle by walking predecessors inside the residual
  // set (every residual vertex keeps a residual in-arc).
  std::vector<bool> residual(nv, false);
  size_t start = nv;
  for (size_t v = 0; v < nv; ++v)
    if (indeg[v] > 0) {
      residual[v] = true;
      if (start == nv) start = v;
    }
  std::vector<size_t> path{start};
  std::vector<long> pos(nv, -1);
  pos[start] = 0;
  size_t cur = start;
  for (;;) {
    size_t prev = nv;
    for (size_t p : in_arcs[cur])
      if (residual[p] && (prev == nv || p < prev)) prev = p;
    if (prev == nv) throw invariant_error("residual vertex without residual predecessor");
    if (pos[prev] >= 0) {
      std::vector<size_t> cycle(path.begin() + pos[prev], path.end());
      std::reverse(cycle.begin(), cycle.end());  // forward (upward) order
      res.cycle = std::move(cycle);
      return res;
    }
    pos[prev] = static_cast<long>(path.size());
    path.push_back(prev);
    cur = prev;
  }
}

Covector default_xi(const RootSystem &R) {
  RatVec rho = R.rho();
  long den = 97;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Covector xi;
    xi.coords = rho;
    for (int i = 0; i < R.rank(); ++i) xi.coords[i] += rat(i + 1, den);
    if (is_regular(xi, R)) return xi;
    den *= 101;
  }
  throw invariant_error("could not perturb rho to a regular covector");
}

std::vector<Covector> chamber_representatives(const RootSystem &R, const WeylGroup &W) {
  Covector xi0 = default_xi(R);
  std::vector<Covector> out;
  out.reserve(W.order());
  for (const WeylElement &w : W.elements) out.push_back(Covector{w.apply(xi0.coords)});
  return out;
}

Covector random_regular_xi(const RootSystem &R, Rng &rng) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Covector xi;
    xi.coords.reserve(R.rank());
    for (int i = 0; i < R.rank(); ++i) xi.coords.push_back(rat(rng.range(-999, 999), 97));
    if (is_regular(xi, R)) return xi;
  }
  throw invariant_error("rejection sampling failed to find a regular covector");
}

bool is_integrable(const AxialFunction &a) {
  const GKMGraph &g = a.graph();
  for (const Covector &xi : chamber_representatives(*g.roots, *g.weyl))
    if (find_morse(Orientation(a, xi)).found()) return true;
  return false;
}

bool closure_oracle(const Section &section, const Subsystem &deltaK, const RootSystem &R) {
  std::set<Root> s(deltaK.roots.begin(), deltaK.roots.end());
  for (const Root &r : section.delta0()) s.insert(r);
  for (const Root &x : s)
    for (const Root &y : s) {
      Root sum = x + y;
      if (!sum.is_zero() && R.contains(sum) && !s.count(sum)) return false;
    }
  return true;
}

std::optional<MorseAssignment> geometric_morse(const AxialFunction &a, const Covector &xi) {
  const GKMGraph &g = a.graph();
  const RootSystem &R = *g.roots;
  if (!closure_oracle(a.section(), g.delta_k, R)) return std::nullopt;
  if (!is_regular(xi, R)) throw spec_error("geometric_morse requires a regular xi");

  std::vector<Root> delta0 = a.section().delta0();
  for (const Root &beta : delta0)
    if (R.inner(beta, xi.coords) <= 0)
      throw spec_error("xi is not compatible with the section: (" + beta.str() + ", xi) <= 0");

  // lambda = -sum(Delta_0) is W_K-invariant; vertex values (w_v lambda, xi)
  // rise strictly along upward edges, with the minimum at the identity coset.
  Root mu;
  mu.c.assign(R.rank(), 0);
  for (const Root &beta : delta0) mu = mu + beta;
  RatVec lambda(R.rank());
  for (int i = 0; i < R.rank(); ++i) lambda[i] = Rational(-mu.c[i]);
  for (const WeylElement &u : g.weyl_k->elements)
    if (!(u.apply(mu) == mu)) throw invariant_error("sum of Delta_0 is not W_K-invariant");

  MorseAssignment m;
  m.values.reserve(g.vertex_count());
  for (size_t v = 0; v < g.vertex_count(); ++v)
    m.values.push_back(R.inner(g.representative(v).apply(lambda), xi.coords));

  Orientation o(a, xi);
  for (size_t v = 0; v < g.vertex_count(); ++v)
    for (const OrientedEdge &e : g.edges_at(v))
      if (o.up(e) && !(m.values[g.target(e)] > m.values[v]))
        throw invariant_error("geometric Morse values fail to increase along an upward edge");
  return m;
}

}  // namespace gkm
