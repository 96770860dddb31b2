#ifndef GKM_GRAPH_HPP
#define GKM_GRAPH_HPP

#include <memory>
#include <vector>

#include "gkm/weyl.hpp"

namespace gkm {

// A root modulo sign; the representative is the lexicographically larger
// member of {gamma, -gamma}.
struct RootClass {
  Root rep;

  RootClass() = default;
  explicit RootClass(const Root &gamma);

  bool operator==(const RootClass &o) const { return rep == o.rep; }
  bool operator!=(const RootClass &o) const { return rep != o.rep; }
  bool operator<(const RootClass &o) const { return rep < o.rep; }
};

// Vertices are dense indices into CosetSpace::representatives.

// Oriented edge of the GKM graph, keyed by source vertex and direction
// class; the reverse edge shares the class and starts at the target.
struct OrientedEdge {
  size_t source = 0;
  RootClass direction;

  bool operator==(const OrientedEdge &o) const {
    return source == o.source && direction == o.direction;
  }
};

// One undirected edge, through its canonical oriented realization
// (smaller vertex index first).
struct EdgeRecord {
  size_t source;
  size_t target;
  RootClass direction;
};

// The GKM graph of M = G/K: vertices are the cosets W_G/W_K, and each
// vertex [w] carries one edge per class [w beta], beta in Delta_{G,K},
// leading to the coset of sigma_{w beta} w. Multi-edges are real (distinct
// classes may join the same vertex pair). Immutable after build_graph and
// safely copyable; the underlying groups live on the heap.
class GKMGraph {
 public:
  std::shared_ptr<const RootSystem> roots;
  std::shared_ptr<const WeylGroup> weyl;    // W_G
  std::shared_ptr<const WeylGroup> weyl_k;  // W_K
  CosetSpace cosets;                        // vertices, canonical order
  Subsystem delta_k;
  Subsystem delta_gk;  // complement

  // directions[v]: sorted direction classes at vertex v (all the same size).
  std::vector<std::vector<RootClass>> directions;
  // targets[v][i]: target vertex of (v, directions[v][i]).
  std::vector<std::vector<size_t>> targets;

  size_t vertex_count() const { return cosets.count(); }
  size_t degree() const { return delta_gk.size() / 2; }
  const WeylElement &representative(size_t v) const { return cosets.representatives[v]; }

  // Index of the class in directions[source]; throws if the edge is absent.
  size_t direction_index(const OrientedEdge &e) const;
  size_t target(const OrientedEdge &e) const;
  OrientedEdge reverse(const OrientedEdge &e) const;
  std::vector<OrientedEdge> edges_at(size_t v) const;

  // Every undirected edge once, ordered by (source, class).
  std::vector<EdgeRecord> edge_list() const;
  size_t edge_count() const { return vertex_count() * degree() / 2; }
};

// Builds the graph; requires deltaK closed and deltaK != Delta_G.
GKMGraph build_graph(const RootSystem &R, const Subsystem &deltaK);

// The natural connection: for e, e' sharing a source, the edge at
// target(e) in direction [sigma_gamma gamma'].
OrientedEdge connection(const GKMGraph &g, const OrientedEdge &e, const OrientedEdge &e_prime);

// True iff no two vertices are joined by more than one edge.
bool is_simple(const GKMGraph &g);

// |W_G| / |W_K|, the number of T-fixed points.
long euler_characteristic(const GKMGraph &g);

}  // namespace gkm

#endif
