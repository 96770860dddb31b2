#ifndef GKM_MORSE_HPP
#define GKM_MORSE_HPP

#include <optional>
#include <vector>

#include "gkm/axial.hpp"
#include "gkm/rng.hpp"

namespace gkm {

// Edge orientation induced by a regular xi: e points upward when
// (value(e), xi) > 0. Exactly one of e, reverse(e) is upward.
class Orientation {
 public:
  Orientation(const AxialFunction &a, Covector xi);  // throws on irregular xi

  const AxialFunction &axial() const { return *axial_; }
  const Covector &xi() const { return xi_; }
  bool up(const OrientedEdge &e) const;

 private:
  const AxialFunction *axial_;
  Covector xi_;
};

struct BettiVector {
  std::vector<long> counts;  // counts[k] = #vertices of index k

  bool operator==(const BettiVector &o) const { return counts == o.counts; }
  long sum() const;
  bool palindromic() const;
};

// Vertex values strictly increasing along every upward edge.
struct MorseAssignment {
  std::vector<Rational> values;  // indexed by vertex
};

// Either a Morse assignment (canonical longest-path ranks) or a witness
// directed cycle of upward edges.
struct MorseResult {
  std::optional<MorseAssignment> assignment;
  std::vector<size_t> cycle;  // nonempty iff assignment is absent

  bool found() const { return assignment.has_value(); }
};

// Number of downward edges at v.
int index(const Orientation &o, size_t v);

BettiVector betti(const Orientation &o);

// True iff betti agrees across all supplied regular xi (vacuous for one).
bool betti_invariance(const AxialFunction &a, const std::vector<Covector> &xis);

MorseResult find_morse(const Orientation &o);

// Generic interior point of the dominant chamber: rho plus a small
// asymmetric perturbation, validated regular.
Covector default_xi(const RootSystem &R);

// One interior point per Weyl chamber: {w xi0 : w in W}, in canonical
// element order.
std::vector<Covector> chamber_representatives(const RootSystem &R, const WeylGroup &W);

// Rejection-samples a regular covector with small rational coordinates.
Covector random_regular_xi(const RootSystem &R, Rng &rng);

// True iff some chamber orients the graph acyclically (the combinatorial
// face of an invariant complex structure).
bool is_integrable(const AxialFunction &a);

// Independent criterion: Delta_K together with the section image Delta_0
// is additively closed in Delta_G. Agrees with is_integrable on every
// input.
bool closure_oracle(const Section &section, const Subsystem &deltaK, const RootSystem &R);

// Coadjoint-orbit Morse function: values (w_v lambda, xi) for the
// W_K-invariant weight lambda = -sum(Delta_0). Requires the closure
// criterion (returns nullopt otherwise) and xi regular with
// (beta, xi) > 0 for every beta in Delta_0 (throws otherwise).
std::optional<MorseAssignment> geometric_morse(const AxialFunction &a, const Covector &xi);

}  // namespace gkm

#endif
