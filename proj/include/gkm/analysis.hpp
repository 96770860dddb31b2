#ifndef GKM_ANALYSIS_HPP
#define GKM_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

// A user-facing space description: Cartan type plus one of the K forms
// "torus", "long", "short", "parabolic:i,j,...", "explicit:[c,...];[c,...]".
struct SpaceSpec {
  CartanDatum datum;
  std::string k_raw;
};

struct ResolvedSpec {
  SpaceSpec spec;
  RootSystem R;
  Subsystem deltaK;  // already closed
  std::vector<std::string> warnings;
};

// Parses and resolves K, closing the generator set and recording a warning
// when closure strictly enlarged the request. Throws spec_error on
// malformed input.
ResolvedSpec resolve_space(const std::string &type, const std::string &k_spec);

// A fully built space: the graph plus the spec echo and warnings.
struct Space {
  SpaceSpec spec;
  GKMGraph graph;
  std::vector<std::string> warnings;

  const RootSystem &roots() const { return *graph.roots; }
};

Space build_space(const ResolvedSpec &resolved);
Space build_space(const std::string &type, const std::string &k_spec);

// DOT rendering of the undirected multigraph; nodes are labelled by
// reduced words, edges by their root class.
std::string render_dot(const Space &s);

// Report-shaped JSON with only the space/graph/warnings sections filled.
std::string graph_json(const Space &s);

// Full analysis report: ACS condition, all sections with axiom status,
// Betti vectors (checked invariant over seeded random xi plus every
// chamber), integrability by chamber search and by the closure criterion.
// Disagreement between the two, or an axiom failure, throws
// invariant_error.
std::string analyze_json(const Space &s, uint64_t seed, int num_xi);

// Property-check report for the Borel-to-GKM map on seeded random inputs;
// throws invariant_error if any identity fails.
std::string cohomology_json(const Space &s, uint64_t seed, int trials, int max_degree);

}  // namespace gkm

#endif
