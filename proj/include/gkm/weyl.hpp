#ifndef GKM_WEYL_HPP
#define GKM_WEYL_HPP

#include <optional>
#include <string>
#include <vector>

#include "gkm/rootsystem.hpp"

namespace gkm {

// An element of the Weyl group as an exact integer matrix acting on t* in
// the simple-root basis, with its Coxeter length cached. Equality is matrix
// equality; reduced words are recovered on demand.
struct WeylElement {
  // matrix[i][j]: i-th coordinate of the image of alpha_j.
  std::vector<std::vector<long>> matrix;
  int length = 0;

  int dim() const { return static_cast<int>(matrix.size()); }
  bool is_identity() const;

  Root apply(const Root &v) const;
  RatVec apply(const RatVec &v) const;
  WeylElement compose(const WeylElement &other) const;  // this after other
  WeylElement inverse() const;

  bool operator==(const WeylElement &o) const { return matrix == o.matrix; }
  bool operator<(const WeylElement &o) const;  // lexicographic on entries

  static WeylElement identity(int n);
};

class WeylGroup {
 public:
  // Elements in canonical order: by (length, lexicographic matrix).
  std::vector<WeylElement> elements;
  // The reflections the group was generated from.
  std::vector<WeylElement> generators;
  std::vector<Root> generator_roots;

  size_t order() const { return elements.size(); }
  // Index of w in elements; throws invariant_error when absent.
  size_t index_of(const WeylElement &w) const;
  bool contains(const WeylElement &w) const;

 private:
  friend WeylGroup generate_from(const RootSystem &R, const std::vector<Root> &roots);
  std::vector<size_t> by_matrix_;  // element indices sorted by matrix
};

// One canonical representative per left coset w W_K, of minimal length
// (ties broken lexicographically on the matrix), listed in canonical order.
class CosetSpace {
 public:
  const WeylGroup *group = nullptr;     // W_G
  const WeylGroup *subgroup = nullptr;  // W_K
  std::vector<WeylElement> representatives;

  size_t count() const { return representatives.size(); }
  // Coset index of an arbitrary element of W_G.
  size_t coset_of(const WeylElement &w) const;

 private:
  friend CosetSpace cosets(const WeylGroup &W, const WeylGroup &WK);
  std::vector<size_t> element_to_coset_;  // indexed like group->elements
};

// Full Weyl group of R, generated by the simple reflections via
// breadth-first closure; length equals the BFS depth. Refuses rank > 6.
WeylGroup generate_weyl(const RootSystem &R);

// The reflection sigma_beta as a group element.
WeylElement reflection_of(const RootSystem &R, const Root &beta);

// Reflection subgroup generated by {sigma_alpha : alpha in deltaK}.
WeylGroup subgroup_from(const RootSystem &R, const Subsystem &deltaK);

// Left cosets W/WK with canonical minimal representatives.
CosetSpace cosets(const WeylGroup &W, const WeylGroup &WK);

// Number of positive roots sent negative; equals the cached length.
int inversion_count(const RootSystem &R, const WeylElement &w);

// Reduced word in simple reflections, by greedy descent (smallest simple
// index first). Empty for the identity.
std::vector<int> reduced_word(const RootSystem &R, const WeylElement &w);

// "s1 s2" rendering of reduced_word; "e" for the identity.
std::string word_str(const RootSystem &R, const WeylElement &w);

}  // namespace gkm

#endif
