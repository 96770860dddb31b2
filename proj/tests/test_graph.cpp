#include "doctest.h"

#include <map>
#include <set>

#include "gkm/errors.hpp"
#include "gkm/graph.hpp"

using namespace gkm;

namespace {

Root rt(std::vector<int> v) { return Root(std::move(v)); }

RootSystem make(const char *name) { return build_root_system(CartanDatum::parse(name)); }

GKMGraph b2_d2() {
  RootSystem R = make("B2");
  return build_graph(R, close_subsystem({rt({0, 1}), rt({2, 1})}, R));
}

GKMGraph g2_a2() {
  RootSystem R = make("G2");
  return build_graph(R, close_subsystem({rt({0, 1}), rt({3, 1})}, R));
}

GKMGraph a2_torus() {
  RootSystem R = make("A2");
  return build_graph(R, Subsystem{});
}

}  // namespace

TEST_CASE("the three worked examples have the advertised shapes") {
  GKMGraph b2 = b2_d2();
  CHECK(b2.vertex_count() == 2);
  CHECK(b2.edge_count() == 2);
  CHECK_FALSE(is_simple(b2));
  CHECK(euler_characteristic(b2) == 2);

  GKMGraph g2 = g2_a2();
  CHECK(g2.vertex_count() == 2);
  CHECK(g2.edge_count() == 3);
  CHECK_FALSE(is_simple(g2));
  CHECK(euler_characteristic(g2) == 2);

  GKMGraph a2 = a2_torus();
  CHECK(a2.vertex_count() == 6);
  CHECK(a2.edge_count() == 9);
  CHECK(a2.degree() == 3);
  CHECK(is_simple(a2));
  CHECK(euler_characteristic(a2) == 6);
}

TEST_CASE("A2/T is the complete bipartite graph on the length parity") {
  GKMGraph g = a2_torus();
  std::set<size_t> even, odd;
  for (size_t v = 0; v < g.vertex_count(); ++v)
    (g.representative(v).length % 2 == 0 ? even : odd).insert(v);
  CHECK(even.size() == 3);
  CHECK(odd.size() == 3);
  std::set<std::pair<size_t, size_t>> pairs;
  for (const EdgeRecord &e : g.edge_list()) {
    bool se = even.count(e.source) > 0, te = even.count(e.target) > 0;
    CHECK(se != te);
    pairs.insert({std::min(e.source, e.target), std::max(e.source, e.target)});
  }
  CHECK(pairs.size() == 9);  // all cross pairs, no multi-edges
}

TEST_CASE("A1/T is a single edge") {
  RootSystem R = make("A1");
  GKMGraph g = build_graph(R, Subsystem{});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(euler_characteristic(g) == 2);
}

TEST_CASE("a parabolic K gives a simple graph") {
  RootSystem A3 = make("A3");
  GKMGraph g = build_graph(A3, close_subsystem({A3.simples[0], A3.simples[1]}, A3));
  CHECK(g.vertex_count() == 4);
  CHECK(g.degree() == 3);
  CHECK(g.edge_count() == 6);
  CHECK(is_simple(g));
}

TEST_CASE("build_graph validates its input") {
  RootSystem B2 = make("B2");
  Subsystem bad;
  bad.roots = {rt({1, 0}), rt({-1, 0}), rt({1, 1}), rt({-1, -1})};  // not closed
  CHECK_THROWS_AS(build_graph(B2, bad), spec_error);
  Subsystem full;
  full.roots = B2.all_roots;
  CHECK_THROWS_AS(build_graph(B2, full), spec_error);
}

TEST_CASE("degree regularity and reverse involution") {
  for (GKMGraph g : {b2_d2(), g2_a2(), a2_torus()}) {
    for (size_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.directions[v].size() == g.degree());
      for (const OrientedEdge &e : g.edges_at(v)) {
        OrientedEdge r = g.reverse(e);
        CHECK(g.target(r) == e.source);
        CHECK(g.reverse(r) == e);
      }
    }
  }
}

TEST_CASE("direction sets do not depend on the coset representative") {
  for (GKMGraph g : {b2_d2(), g2_a2()}) {
    for (size_t v = 0; v < g.vertex_count(); ++v) {
      const WeylElement &w = g.representative(v);
      for (const WeylElement &u : g.weyl_k->elements) {
        WeylElement alt = w.compose(u);
        std::set<RootClass> dirs;
        for (const Root &beta : g.delta_gk.roots)
          if (beta.is_positive()) dirs.insert(RootClass(alt.apply(beta)));
        std::set<RootClass> canonical(g.directions[v].begin(), g.directions[v].end());
        CHECK(dirs == canonical);
      }
    }
  }
}

TEST_CASE("connection basics") {
  GKMGraph g = a2_torus();
  // the identity coset is vertex 0
  CHECK(g.representative(0).is_identity());
  OrientedEdge e1{0, RootClass(rt({1, 0}))};
  OrientedEdge e2{0, RootClass(rt({0, 1}))};
  CHECK(connection(g, e1, e1) == g.reverse(e1));
  CHECK(connection(g, e1, e2).direction == RootClass(rt({1, 1})));
  CHECK(connection(g, e1, e2).source == g.target(e1));
}

TEST_CASE("connection fixes orthogonal directions") {
  RootSystem B2 = make("B2");
  GKMGraph g = build_graph(B2, Subsystem{});  // B2 / T
  OrientedEdge e{0, RootClass(rt({0, 1}))};
  OrientedEdge ep{0, RootClass(rt({2, 1}))};
  CHECK(B2.inner(e.direction.rep, ep.direction.rep) == 0);
  CHECK(connection(g, e, ep).direction == ep.direction);
}

TEST_CASE("connection is a bijection onto the target edge set") {
  GKMGraph g = g2_a2();
  for (size_t v = 0; v < g.vertex_count(); ++v)
    for (const OrientedEdge &e : g.edges_at(v)) {
      std::set<RootClass> images;
      for (const OrientedEdge &ep : g.edges_at(v)) {
        OrientedEdge moved = connection(g, e, ep);
        CHECK(moved.source == g.target(e));
        images.insert(moved.direction);
      }
      CHECK(images.size() == g.degree());
    }
}

TEST_CASE("connection witnesses coplanarity exactly") {
  GKMGraph g = a2_torus();
  const RootSystem &R = *g.roots;
  for (size_t v = 0; v < g.vertex_count(); ++v)
    for (const OrientedEdge &e : g.edges_at(v))
      for (const OrientedEdge &ep : g.edges_at(v)) {
        Root gamma = e.direction.rep, gp = ep.direction.rep;
        Root image = reflect(R, gamma, gp);
        long k = cartan_int(R, gp, gamma);
        Root expect = gp;
        for (size_t i = 0; i < expect.c.size(); ++i)
          expect.c[i] -= static_cast<int>(k * gamma.c[i]);
        CHECK(image == expect);
        CHECK(connection(g, e, ep).direction == RootClass(image));
      }
}

TEST_CASE("W_G acts transitively on vertices and preserves the labelling") {
  GKMGraph g = a2_torus();
  std::set<size_t> images;
  for (const WeylElement &w : g.weyl->elements) {
    images.insert(g.cosets.coset_of(w));  // orbit of the identity vertex
    for (size_t v = 0; v < g.vertex_count(); ++v) {
      size_t wv = g.cosets.coset_of(w.compose(g.representative(v)));
      for (size_t i = 0; i < g.directions[v].size(); ++i) {
        OrientedEdge moved{wv, RootClass(w.apply(g.directions[v][i].rep))};
        CHECK(g.target(moved) == g.cosets.coset_of(w.compose(g.representative(g.targets[v][i]))));
      }
    }
  }
  CHECK(images.size() == g.vertex_count());
}

TEST_CASE("multi-edge identity: B2/D2 edges share endpoints but not classes") {
  GKMGraph g = b2_d2();
  auto edges = g.edge_list();
  REQUIRE(edges.size() == 2);
  CHECK(edges[0].source == edges[1].source);
  CHECK(edges[0].target == edges[1].target);
  CHECK(edges[0].direction != edges[1].direction);
}
