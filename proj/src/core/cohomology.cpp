#include "gkm/cohomology.hpp"

#include "gkm/errors.hpp"

namespace gkm {

GKMClass constant_class(const Polynomial &f, const GKMGraph &g) {
  GKMClass c;
  c.values.assign(g.vertex_count(), f);
  return c;
}

bool gkm_membership(const GKMClass &c, const GKMGraph &g) {
  if (c.values.size() != g.vertex_count())
    throw spec_error("class does not assign a polynomial to every vertex");
  for (const EdgeRecord &e : g.edge_list()) {
    Polynomial diff = c.values[e.target] - c.values[e.source];
    if (!divisible_by_linear(diff, e.direction.rep)) return false;
  }
  return true;
}

GKMClass borel_map(const Polynomial &f1, const Polynomial &f2, const GKMGraph &g) {
  if (!is_invariant(f1, *g.weyl_k))
    throw spec_error("borel_map: f1 is not W_K-invariant");
  GKMClass c;
  c.values.reserve(g.vertex_count());
  for (size_t v = 0; v < g.vertex_count(); ++v)
    c.values.push_back(weyl_act_poly(g.representative(v), f1) * f2);
#ifndef NDEBUG
  // Well-definedness over the coset: a second representative w u must give
  // the same value.
  if (g.weyl_k->order() > 1) {
    const WeylElement &u = g.weyl_k->elements[1];
    for (size_t v = 0; v < g.vertex_count(); ++v) {
      Polynomial alt = weyl_act_poly(g.representative(v).compose(u), f1) * f2;
      if (alt != c.values[v])
        throw invariant_error("borel_map value depends on the coset representative");
    }
  }
#endif
  return c;
}

GKMClass weyl_act_class(const WeylElement &w, const GKMClass &c, const GKMGraph &g) {
  if (c.values.size() != g.vertex_count())
    throw spec_error("class does not assign a polynomial to every vertex");
  WeylElement winv = w.inverse();
  GKMClass out;
  out.values.reserve(g.vertex_count());
  for (size_t v = 0; v < g.vertex_count(); ++v) {
    size_t pre = g.cosets.coset_of(winv.compose(g.representative(v)));
    out.values.push_back(weyl_act_poly(w, c.values[pre]));
  }
  return out;
}

GKMClass class_product(const GKMClass &a, const GKMClass &b) {
  if (a.values.size() != b.values.size())
    throw spec_error("class sizes differ");
  GKMClass out;
  out.values.reserve(a.values.size());
  for (size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
  return out;
}

}  // namespace gkm
