#include "gkm/axial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

std::vector<Root> Section::delta0() const {
  std::vector<Root> out;
  out.reserve(choice.size());
  for (const auto &[cls, root] : choice) out.push_back(root);
  std::sort(out.begin(), out.end());
  return out;
}

Section Section::negated() const {
  Section s;
  for (const auto &[cls, root] : choice) s.choice[cls] = -root;
  return s;
}

AxialFunction::AxialFunction(const GKMGraph &g, Section s)
    : graph_(&g), section_(std::move(s)) {
  rep_inverse_.reserve(g.vertex_count());
  for (size_t v = 0; v < g.vertex_count(); ++v)
    rep_inverse_.push_back(g.representative(v).inverse());
}

Root AxialFunction::value(const OrientedEdge &e) const {
  const WeylElement &w = graph_->representative(e.source);
  Root beta = rep_inverse_[e.source].apply(e.direction.rep);
  auto it = section_.choice.find(RootClass(beta));
  if (it == section_.choice.end())
    throw invariant_error("edge direction " + e.direction.rep.str() +
                          " is not in the Delta_{G,K} orbit of this section");
  return w.apply(it->second);
}

bool check_acs_condition(const GKMGraph &g) {
  for (const WeylElement &u : g.weyl_k->elements) {
    if (u.is_identity()) continue;
    for (const Root &alpha : g.delta_gk.roots)
      if (u.apply(alpha) == -alpha) return false;
  }
  return true;
}

std::vector<std::vector<RootClass>> section_orbits(const GKMGraph &g) {
  std::set<RootClass> todo;
  for (const Root &r : g.delta_gk.roots)
    if (r.is_positive()) todo.insert(RootClass(r));

  std::vector<std::vector<RootClass>> orbits;
  while (!todo.empty()) {
    RootClass base = *todo.begin();
    std::set<RootClass> orbit;
    for (const WeylElement &u : g.weyl_k->elements) orbit.insert(RootClass(u.apply(base.rep)));
    std::vector<RootClass> sorted(orbit.begin(), orbit.end());
    for (const RootClass &c : sorted) todo.erase(c);
    orbits.push_back(std::move(sorted));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return orbits;
}

std::vector<Section> enumerate_sections(const GKMGraph &g) {
  auto orbits = section_orbits(g);
  if (orbits.size() > 20)
    throw spec_error("section enumeration would produce 2^" + std::to_string(orbits.size()) +
                     " sections; refusing");

  // Per orbit, propagate the base choice equivariantly; a conflict on a
  // class stabilizer is exactly the obstruction u alpha = -alpha.
  std::vector<std::map<RootClass, Root>> plus_choice;
  for (const auto &orbit : orbits) {
    const Root &base = orbit.front().rep;
    std::map<RootClass, Root> assign;
    for (const WeylElement &u : g.weyl_k->elements) {
      Root val = u.apply(base);
      auto [it, inserted] = assign.emplace(RootClass(val), val);
      if (!inserted && !(it->second == val)) return {};
    }
    if (assign.size() != orbit.size())
      throw invariant_error("orbit propagation missed classes");
    plus_choice.push_back(std::move(assign));
  }

  std::vector<Section> out;
  const size_t k = orbits.size();
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    Section s;
    for (size_t j = 0; j < k; ++j)
      for (const auto &[cls, val] : plus_choice[j])
        s.choice[cls] = (mask >> j) & 1 ? -val : val;
    out.push_back(std::move(s));
  }
  return out;
}

Root axial_value(const AxialFunction &a, const OrientedEdge &e) { return a.value(e); }

namespace {

bool linearly_independent(const Root &x, const Root &y) {
  const size_t n = x.c.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (static_cast<long>(x.c[i]) * y.c[j] != static_cast<long>(x.c[j]) * y.c[i]) return true;
  return false;
}

std::string edge_str(const OrientedEdge &e) {
  std::ostringstream os;
  os << "(v" << e.source << ", " << e.direction.rep.str() << ")";
  return os.str();
}

}  // namespace

AxialCheck verify_axial(const AxialFunction &a) {
  const GKMGraph &g = a.graph();
  const RootSystem &R = *g.roots;
  for (size_t v = 0; v < g.vertex_count(); ++v) {
    auto edges = g.edges_at(v);
    std::vector<Root> vals;
    for (const auto &e : edges) vals.push_back(a.value(e));

    for (size_t i = 0; i < edges.size(); ++i)
      for (size_t j = i + 1; j < edges.size(); ++j)
        if (!linearly_independent(vals[i], vals[j]))
          return {1, "values at vertex " + std::to_string(v) + " on " + edge_str(edges[i]) +
                         " and " + edge_str(edges[j]) + " are dependent"};

    for (size_t i = 0; i < edges.size(); ++i) {
      Root rev = a.value(g.reverse(edges[i]));
      if (!(rev == -vals[i]))
        return {2, "reversal of " + edge_str(edges[i]) + " has value " + rev.str() +
                       ", expected " + (-vals[i]).str()};
    }

    for (size_t i = 0; i < edges.size(); ++i)
      for (size_t j = 0; j < edges.size(); ++j) {
        OrientedEdge moved = connection(g, edges[i], edges[j]);
        Root lhs = a.value(moved) + (-vals[j]);
        long k = cartan_int(R, vals[j], vals[i]);
        Root rhs = vals[i];
        for (auto &c : rhs.c) c = static_cast<int>(-k * c);
        if (!(lhs == rhs))
          return {3, "connection identity fails at vertex " + std::to_string(v) + " for e=" +
                         edge_str(edges[i]) + ", e'=" + edge_str(edges[j])};
      }
  }
  return {};
}

}  // namespace gkm
