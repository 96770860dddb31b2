#include "doctest.h"

#include <map>
#include <set>

#include "gkm/errors.hpp"
#include "gkm/weyl.hpp"

using namespace gkm;

namespace {

Root rt(std::vector<int> v) { return Root(std::move(v)); }

RootSystem make(const char *name) { return build_root_system(CartanDatum::parse(name)); }

// Independent word-length computation: breadth-first over right products
// with the simple reflections.
std::map<std::vector<std::vector<long>>, int> bfs_depths(const RootSystem &R) {
  std::vector<WeylElement> gens;
  for (const Root &s : R.simples) gens.push_back(reflection_of(R, s));
  std::map<std::vector<std::vector<long>>, int> depth;
  std::vector<WeylElement> frontier{WeylElement::identity(R.rank())};
  depth[frontier[0].matrix] = 0;
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    std::vector<WeylElement> next;
    for (const WeylElement &w : frontier)
      for (const WeylElement &g : gens) {
        WeylElement m = w.compose(g);
        if (depth.emplace(m.matrix, d).second) next.push_back(m);
      }
    frontier = std::move(next);
  }
  return depth;
}

}  // namespace

TEST_CASE("Weyl group orders") {
  struct Case { const char *name; size_t order; } cases[] = {
      {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}, {"C3", 48},
      {"D4", 192}};
  for (const auto &c : cases) {
    RootSystem R = make(c.name);
    WeylGroup W = generate_weyl(R);
    CHECK_MESSAGE(W.order() == c.order, c.name);
  }
}

TEST_CASE("rank above six is refused") {
  RootSystem E7 = build_root_system(CartanDatum::parse("E7"));
  CHECK(E7.all_roots.size() == 126);
  CHECK_THROWS_AS(generate_weyl(E7), spec_error);
}

TEST_CASE("every element preserves the gram form") {
  for (const char *name : {"A2", "B2", "G2", "B3"}) {
    RootSystem R = make(name);
    WeylGroup W = generate_weyl(R);
    const int n = R.rank();
    for (const WeylElement &w : W.elements) {
      // (w x, w y) = (x, y) on the basis
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(R.inner(w.apply(R.simples[i]), w.apply(R.simples[j])) == R.gram[i][j]);
    }
  }
}

TEST_CASE("cached length equals BFS word length and inversion count") {
  for (const char *name : {"A2", "B2", "G2", "A3"}) {
    RootSystem R = make(name);
    WeylGroup W = generate_weyl(R);
    auto depth = bfs_depths(R);
    CHECK(depth.size() == W.order());
    size_t positives = R.all_roots.size() / 2;
    int longest = 0;
    for (const WeylElement &w : W.elements) {
      CHECK(w.length == depth.at(w.matrix));
      CHECK(w.length == inversion_count(R, w));
      longest = std::max(longest, w.length);
    }
    CHECK(longest == static_cast<int>(positives));
  }
}

TEST_CASE("reflection_of") {
  RootSystem B2 = make("B2");
  for (const Root &beta : B2.all_roots) {
    WeylElement s = reflection_of(B2, beta);
    CHECK(s.compose(s).is_identity());
    CHECK(s.apply(beta) == -beta);
  }
  CHECK(reflection_of(B2, B2.simples[0]).length == 1);
  CHECK(reflection_of(B2, B2.simples[1]).length == 1);
  // sigma_{2a1+a2} sends a1 to -(a1+a2)
  CHECK(reflection_of(B2, rt({2, 1})).apply(rt({1, 0})) == rt({-1, -1}));
}

TEST_CASE("subgroup_from") {
  RootSystem G2 = make("G2");
  CHECK(subgroup_from(G2, Subsystem{}).order() == 1);

  Subsystem longA2 = close_subsystem({rt({0, 1}), rt({3, 1})}, G2);
  CHECK(longA2.size() == 6);
  WeylGroup WK = subgroup_from(G2, longA2);
  CHECK(WK.order() == 6);

  RootSystem B2 = make("B2");
  Subsystem d2 = close_subsystem({rt({0, 1}), rt({2, 1})}, B2);
  CHECK(subgroup_from(B2, d2).order() == 4);
}

TEST_CASE("W_K stabilizes both deltaK and its complement") {
  RootSystem G2 = make("G2");
  Subsystem longA2 = close_subsystem({rt({0, 1}), rt({3, 1})}, G2);
  Subsystem comp = complement(longA2, G2);
  WeylGroup WK = subgroup_from(G2, longA2);
  for (const WeylElement &u : WK.elements) {
    for (const Root &r : longA2.roots) CHECK(longA2.contains(u.apply(r)));
    for (const Root &r : comp.roots) CHECK(comp.contains(u.apply(r)));
  }
}

TEST_CASE("cosets: counts and canonical representatives") {
  RootSystem B2 = make("B2");
  WeylGroup W = generate_weyl(B2);

  WeylGroup trivial = subgroup_from(B2, Subsystem{});
  CosetSpace all = cosets(W, trivial);
  CHECK(all.count() == W.order());

  Subsystem d2 = close_subsystem({rt({0, 1}), rt({2, 1})}, B2);
  WeylGroup WK = subgroup_from(B2, d2);
  CosetSpace cs = cosets(W, WK);
  CHECK(cs.count() == 2);
  CHECK(cs.count() * WK.order() == W.order());

  // representative is length-minimal in its coset, and coset_of is
  // right-W_K-invariant
  for (const WeylElement &w : W.elements) {
    size_t c = cs.coset_of(w);
    CHECK(cs.representatives[c].length <= w.length);
    for (const WeylElement &u : WK.elements) CHECK(cs.coset_of(w.compose(u)) == c);
  }

  RootSystem G2 = make("G2");
  WeylGroup WG = generate_weyl(G2);
  Subsystem longA2 = close_subsystem({rt({0, 1}), rt({3, 1})}, G2);
  CosetSpace cs2 = cosets(WG, subgroup_from(G2, longA2));
  CHECK(cs2.count() == 2);
}

TEST_CASE("cosets of a parabolic in A3") {
  RootSystem A3 = make("A3");
  WeylGroup W = generate_weyl(A3);
  Subsystem pk = close_subsystem({A3.simples[0], A3.simples[1]}, A3);
  WeylGroup WK = subgroup_from(A3, pk);
  CHECK(WK.order() == 6);
  CosetSpace cs = cosets(W, WK);
  CHECK(cs.count() == 4);
  std::multiset<int> lengths;
  for (const WeylElement &r : cs.representatives) lengths.insert(r.length);
  CHECK(lengths == std::multiset<int>{0, 1, 2, 3});
}

TEST_CASE("cosets rejects a non-subgroup") {
  RootSystem B2 = make("B2");
  WeylGroup W = generate_weyl(B2);
  Subsystem d2 = close_subsystem({rt({0, 1}), rt({2, 1})}, B2);
  WeylGroup WK = subgroup_from(B2, d2);
  CHECK_THROWS_AS(cosets(WK, W), spec_error);
}

TEST_CASE("reduced words reconstruct their elements") {
  for (const char *name : {"B2", "G2"}) {
    RootSystem R = make(name);
    WeylGroup W = generate_weyl(R);
    for (const WeylElement &w : W.elements) {
      std::vector<int> word = reduced_word(R, w);
      CHECK(static_cast<int>(word.size()) == w.length);
      WeylElement prod = WeylElement::identity(R.rank());
      for (int i : word) prod = prod.compose(reflection_of(R, R.simples[i - 1]));
      CHECK(prod == w);
    }
  }
  RootSystem A2 = make("A2");
  CHECK(word_str(A2, WeylElement::identity(2)) == "e");
  CHECK(word_str(A2, reflection_of(A2, A2.simples[0])) == "s1");
}
