#include "gkm/graph.hpp"

#include <algorithm>
#include <map>

#include "gkm/errors.hpp"

namespace gkm {

RootClass::RootClass(const Root &gamma) {
  Root neg = -gamma;
  rep = gamma.c < neg.c ? neg : gamma;
}

size_t GKMGraph::direction_index(const OrientedEdge &e) const {
  const auto &dirs = directions[e.source];
  auto it = std::lower_bound(dirs.begin(), dirs.end(), e.direction);
  if (it == dirs.end() || !(*it == e.direction))
    throw invariant_error("no edge in direction " + e.direction.rep.str() + " at vertex " +
                          std::to_string(e.source));
  return static_cast<size_t>(it - dirs.begin());
}

size_t GKMGraph::target(const OrientedEdge &e) const {
  return targets[e.source][direction_index(e)];
}

OrientedEdge GKMGraph::reverse(const OrientedEdge &e) const {
  return OrientedEdge{target(e), e.direction};
}

std::vector<OrientedEdge> GKMGraph::edges_at(size_t v) const {
  std::vector<OrientedEdge> out;
  out.reserve(directions[v].size());
  for (const RootClass &c : directions[v]) out.push_back(OrientedEdge{v, c});
  return out;
}

std::vector<EdgeRecord> GKMGraph::edge_list() const {
  std::vector<EdgeRecord> out;
  for (size_t v = 0; v < vertex_count(); ++v)
    for (size_t i = 0; i < directions[v].size(); ++i)
      if (v < targets[v][i]) out.push_back(EdgeRecord{v, targets[v][i], directions[v][i]});
  return out;
}

GKMGraph build_graph(const RootSystem &R, const Subsystem &deltaK) {
  // The construction relies on W_K stabilizing the complement, which needs
  // deltaK additively closed and symmetric.
  for (const Root &r : deltaK.roots) {
    if (!R.contains(r)) throw spec_error("deltaK contains a non-root " + r.str());
    if (!deltaK.contains(-r)) throw spec_error("deltaK is not closed under negation");
    for (const Root &s : deltaK.roots) {
      Root sum = r + s;
      if (!sum.is_zero() && R.contains(sum) && !deltaK.contains(sum))
        throw spec_error("deltaK is not additively closed: " + r.str() + " + " + s.str() +
                         " = " + sum.str() + " is missing");
    }
  }
  if (deltaK.size() == R.all_roots.size())
    throw spec_error("deltaK equals the full root set, so K = G and M = G/K is a point");

  GKMGraph g;
  g.roots = std::make_shared<RootSystem>(R);
  g.delta_k = deltaK;
  g.delta_gk = complement(deltaK, R);
  g.weyl = std::make_shared<WeylGroup>(generate_weyl(*g.roots));
  g.weyl_k = std::make_shared<WeylGroup>(subgroup_from(*g.roots, deltaK));
  g.cosets = cosets(*g.weyl, *g.weyl_k);

  const size_t nv = g.cosets.count();
  g.directions.resize(nv);
  g.targets.resize(nv);
  for (size_t v = 0; v < nv; ++v) {
    const WeylElement &w = g.cosets.representatives[v];
    std::map<RootClass, size_t> dirs;
    for (const Root &beta : g.delta_gk.roots) {
      if (!beta.is_positive()) continue;  // one representative per class
      Root gamma = w.apply(beta);
      WeylElement tgt = reflection_of(*g.roots, gamma).compose(w);
      dirs[RootClass(gamma)] = g.cosets.coset_of(tgt);
    }
    if (dirs.size() != g.degree())
      throw invariant_error("direction classes collapsed at a vertex; deltaK is corrupt");
    for (auto &[cls, tgt] : dirs) {
      if (tgt == v) throw invariant_error("GKM graph grew a self-loop; deltaK is corrupt");
      g.directions[v].push_back(cls);
      g.targets[v].push_back(tgt);
    }
  }
  return g;
}

OrientedEdge connection(const GKMGraph &g, const OrientedEdge &e, const OrientedEdge &e_prime) {
  if (e.source != e_prime.source)
    throw invariant_error("connection: edges do not share their source vertex");
  const Root &gamma = e.direction.rep;
  Root image = reflect(*g.roots, gamma, e_prime.direction.rep);
  OrientedEdge out{g.target(e), RootClass(image)};
  g.direction_index(out);  // validates existence
  return out;
}

bool is_simple(const GKMGraph &g) {
  for (size_t v = 0; v < g.vertex_count(); ++v) {
    std::map<size_t, int> seen;
    for (size_t t : g.targets[v])
      if (++seen[t] > 1) return false;
  }
  return true;
}

long euler_characteristic(const GKMGraph &g) { return static_cast<long>(g.vertex_count()); }

}  // namespace gkm
