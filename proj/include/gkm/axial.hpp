#ifndef GKM_AXIAL_HPP
#define GKM_AXIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

// A W_K-equivariant sign choice on Delta_{G,K}/±1: one member of
// {gamma, -gamma} per class, with choice([u gamma]) = u choice([gamma]).
struct Section {
  std::map<RootClass, Root> choice;

  // The image Delta_0, sorted.
  std::vector<Root> delta0() const;
  Section negated() const;
};

// The induced labelling of oriented edges by weights, Eq-style
// value([w],[gamma]) = w choice([w^-1 gamma]); stored as (graph, section)
// and evaluated on demand.
class AxialFunction {
 public:
  AxialFunction(const GKMGraph &g, Section s);

  const GKMGraph &graph() const { return *graph_; }
  const Section &section() const { return section_; }

  Root value(const OrientedEdge &e) const;

 private:
  const GKMGraph *graph_;
  Section section_;
  std::vector<WeylElement> rep_inverse_;  // cached per vertex
};

// Result of checking the three axial-function axioms; axiom 0 means all
// passed, otherwise the first violated axiom (1..3) with a witness.
struct AxialCheck {
  int violated_axiom = 0;
  std::string detail;

  bool ok() const { return violated_axiom == 0; }
};

// True iff no u in W_K and alpha in Delta_{G,K} satisfy u alpha = -alpha;
// equivalent to the existence of a section.
bool check_acs_condition(const GKMGraph &g);

// W_K-orbits on the direction classes of Delta_{G,K}, each orbit sorted,
// orbits ordered by their smallest class.
std::vector<std::vector<RootClass>> section_orbits(const GKMGraph &g);

// All W_K-equivariant sections, 2^{#orbits} of them when the existence
// condition holds and none otherwise. Section i flips the sign on orbit j
// exactly when bit j of i is set, so section 0 picks the canonical class
// representatives wherever possible.
std::vector<Section> enumerate_sections(const GKMGraph &g);

Root axial_value(const AxialFunction &a, const OrientedEdge &e);

// Checks, over every vertex and edge pair: pairwise linear independence,
// reversal antisymmetry, and the exact connection identity
// value(theta_e(e')) - value(e') = -<value(e'), value(e)> value(e).
AxialCheck verify_axial(const AxialFunction &a);

}  // namespace gkm

#endif
