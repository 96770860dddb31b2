#ifndef GKM_COHOMOLOGY_HPP
#define GKM_COHOMOLOGY_HPP

#include "gkm/graph.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

// A vertex-indexed tuple of polynomials; members of H*_T(Gamma) are the
// tuples whose edge differences are divisible by the edge label.
struct GKMClass {
  std::vector<Polynomial> values;  // indexed by vertex

  bool operator==(const GKMClass &o) const { return values == o.values; }
};

GKMClass constant_class(const Polynomial &f, const GKMGraph &g);

// The divisibility test over every edge (sign-independent in the label).
bool gkm_membership(const GKMClass &c, const GKMGraph &g);

// The Borel-to-GKM map on decomposables: vertex [w] gets (w f1) f2.
// f1 must be W_K-invariant.
GKMClass borel_map(const Polynomial &f1, const Polynomial &f2, const GKMGraph &g);

// (w g)(p) = w(g(w^-1 p)); permute the vertices and act on the values.
GKMClass weyl_act_class(const WeylElement &w, const GKMClass &c, const GKMGraph &g);

// Pointwise product; membership is preserved.
GKMClass class_product(const GKMClass &a, const GKMClass &b);

}  // namespace gkm

#endif
