#ifndef GKM_ROOTSYSTEM_HPP
#define GKM_ROOTSYSTEM_HPP

#include <string>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

// Cartan type of a simple compact group: family letter plus rank.
struct CartanDatum {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  // Parses "A2", "E6", ... and validates the rank for the family
  // (A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2).
  static CartanDatum parse(const std::string &name);
  void validate() const;
  std::string name() const;
};

// A root, stored as integer coordinates in the simple-root basis.
struct Root {
  std::vector<int> c;

  Root() = default;
  explicit Root(std::vector<int> coeffs) : c(std::move(coeffs)) {}

  bool operator==(const Root &o) const { return c == o.c; }
  bool operator!=(const Root &o) const { return c != o.c; }
  bool operator<(const Root &o) const { return c < o.c; }
  Root operator-() const;
  Root operator+(const Root &o) const;

  bool is_zero() const;
  // Roots have all coordinates of one sign; positive means that sign is +.
  bool is_positive() const;
  std::string str() const;  // "[1,-1,0]"
};

// An element of t (or t*, identified via the invariant form), with exact
// rational coordinates in the simple-root basis.
struct Covector {
  RatVec coords;
};

// Negation-symmetric subset of the ambient root set. Outputs of
// close_subsystem are additively closed as well; the complement
// Delta_{G,K} is merely symmetric.
struct Subsystem {
  std::vector<Root> roots;  // sorted lexicographically

  bool contains(const Root &r) const;
  size_t size() const { return roots.size(); }
};

// The full root system of a simple compact group, with the W-invariant
// inner product normalized so that short roots have squared length 2.
class RootSystem {
 public:
  CartanDatum datum;
  std::vector<Root> simples;    // e_1, ..., e_n
  std::vector<Root> all_roots;  // sorted lexicographically
  // gram[i][j] = (alpha_i, alpha_j); integer under the normalization above.
  std::vector<std::vector<long>> gram;

  int rank() const { return datum.rank; }

  // (x, y) under the invariant form, in simple-root coordinates.
  long inner(const Root &x, const Root &y) const;
  Rational inner(const Root &x, const RatVec &y) const;
  Rational inner(const RatVec &x, const RatVec &y) const;

  long squared_length(const Root &r) const { return inner(r, r); }

  bool contains(const Root &r) const;
  // Index into all_roots; throws invariant_error if absent.
  size_t index_of(const Root &r) const;

  // Half-sum of the positive roots; regular for every type.
  RatVec rho() const;
  // The i-th fundamental weight (1-based), as a vector in t*.
  RatVec fundamental_weight(int i) const;

  std::vector<Root> positive_roots() const;
};

// Generates all roots from the simples by closure under simple reflections.
RootSystem build_root_system(const CartanDatum &datum);

// The integer Cartan pairing <gamma, beta> = 2(gamma,beta)/(beta,beta).
// Throws invariant_error if the quotient is not an integer.
long cartan_int(const RootSystem &R, const Root &gamma, const Root &beta);

// sigma_beta(v) = v - <v,beta> beta.
Root reflect(const RootSystem &R, const Root &beta, const Root &v);
RatVec reflect(const RootSystem &R, const Root &beta, const RatVec &v);

// Smallest subset of R.all_roots containing the generators that is closed
// under negation and under addition within the root set.
Subsystem close_subsystem(const std::vector<Root> &generators, const RootSystem &R);

// Complement Delta_{G,K} = Delta_G - Delta_K.
Subsystem complement(const Subsystem &deltaK, const RootSystem &R);

// True iff (beta, xi) != 0 for every root beta.
bool is_regular(const Covector &xi, const RootSystem &R);

}  // namespace gkm

#endif
