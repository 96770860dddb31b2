#include "gkm/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "gkm/morse.hpp"

namespace gkm {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<Root> parse_explicit_roots(const std::string &body, const RootSystem &R) {
  std::vector<Root> out;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    if (part.front() != '[' || part.back() != ']')
      throw spec_error("explicit K roots must look like [c1,c2,...]: got '" + part + "'");
    std::vector<int> coeffs;
    std::stringstream cs(part.substr(1, part.size() - 2));
    std::string num;
    while (std::getline(cs, num, ',')) {
      size_t pos = 0;
      int value;
      try {
        value = std::stoi(num, &pos);
      } catch (const std::exception &) {
        throw spec_error("bad coefficient '" + num + "' in explicit K root");
      }
      if (pos != num.size()) throw spec_error("bad coefficient '" + num + "' in explicit K root");
      coeffs.push_back(value);
    }
    if (static_cast<int>(coeffs.size()) != R.rank())
      throw spec_error("explicit K root " + part + " has " + std::to_string(coeffs.size()) +
                       " coefficients; rank is " + std::to_string(R.rank()));
    Root r(coeffs);
    if (!R.contains(r)) throw spec_error("explicit K vector " + r.str() + " is not a root");
    out.push_back(r);
  }
  return out;
}

std::vector<Root> roots_of_length(const RootSystem &R, bool longest) {
  long best = 0;
  for (const Root &r : R.all_roots) {
    long l = R.squared_length(r);
    if (best == 0 || (longest ? l > best : l < best)) best = l;
  }
  std::vector<Root> out;
  for (const Root &r : R.all_roots)
    if (R.squared_length(r) == best) out.push_back(r);
  return out;
}

}  // namespace

ResolvedSpec resolve_space(const std::string &type, const std::string &k_spec) {
  ResolvedSpec res;
  res.spec.datum = CartanDatum::parse(type);
  res.spec.k_raw = k_spec;
  res.R = build_root_system(res.spec.datum);
  if (res.R.rank() > 6)
    throw spec_error("analysis is limited to rank <= 6 (got " + type + ")");

  std::vector<Root> generators;
  // "parabolic" denotes the generated subsystem itself, so closure is part
  // of the request there; the other forms name literal root sets and get a
  // warning when closure has to enlarge them.
  bool warn_on_enlargement = true;
  if (k_spec == "torus") {
    // empty
  } else if (k_spec == "long") {
    generators = roots_of_length(res.R, true);
  } else if (k_spec == "short") {
    generators = roots_of_length(res.R, false);
  } else if (k_spec.rfind("parabolic:", 0) == 0) {
    warn_on_enlargement = false;
    std::stringstream ss(k_spec.substr(10));
    std::string num;
    std::set<int> seen;
    while (std::getline(ss, num, ',')) {
      int i;
      size_t pos = 0;
      try {
        i = std::stoi(num, &pos);
      } catch (const std::exception &) {
        throw spec_error("bad simple-root index '" + num + "' in parabolic K");
      }
      if (pos != num.size() || i < 1 || i > res.R.rank())
        throw spec_error("parabolic index " + num + " out of range 1.." +
                         std::to_string(res.R.rank()));
      if (seen.insert(i).second) generators.push_back(res.R.simples[i - 1]);
    }
  } else if (k_spec.rfind("explicit:", 0) == 0) {
    generators = parse_explicit_roots(k_spec.substr(9), res.R);
  } else {
    throw spec_error("unknown K form '" + k_spec +
                     "' (expected torus | long | short | parabolic:i,j | explicit:[..];[..])");
  }

  std::set<Root> requested;
  for (const Root &g : generators) {
    requested.insert(g);
    requested.insert(-g);
  }
  res.deltaK = close_subsystem(generators, res.R);
  if (warn_on_enlargement && res.deltaK.size() > requested.size())
    res.warnings.push_back("closure enlarged the requested K roots from " +
                           std::to_string(requested.size()) + " to " +
                           std::to_string(res.deltaK.size()) + " roots");
  return res;
}

Space build_space(const ResolvedSpec &resolved) {
  Space s;
  s.spec = resolved.spec;
  s.warnings = resolved.warnings;
  s.graph = build_graph(resolved.R, resolved.deltaK);
  return s;
}

Space build_space(const std::string &type, const std::string &k_spec) {
  return build_space(resolve_space(type, k_spec));
}

namespace {

ordered_json space_fragment(const Space &s) {
  ordered_json j;
  j["type"] = s.spec.datum.name();
  j["rank"] = s.roots().rank();
  j["k"] = s.spec.k_raw;
  ordered_json roots = ordered_json::array();
  for (const Root &r : s.graph.delta_k.roots) roots.push_back(r.c);
  j["k_roots"] = std::move(roots);
  return j;
}

ordered_json graph_fragment(const Space &s) {
  const GKMGraph &g = s.graph;
  ordered_json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["degree"] = g.degree();
  j["simple"] = is_simple(g);
  j["euler_characteristic"] = euler_characteristic(g);
  ordered_json words = ordered_json::array();
  for (size_t v = 0; v < g.vertex_count(); ++v)
    words.push_back(word_str(s.roots(), g.representative(v)));
  j["vertex_words"] = std::move(words);
  ordered_json edges = ordered_json::array();
  for (const EdgeRecord &e : g.edge_list()) {
    ordered_json je;
    je["source"] = e.source;
    je["target"] = e.target;
    je["class"] = e.direction.rep.c;
    edges.push_back(std::move(je));
  }
  j["edge_list"] = std::move(edges);
  return j;
}

std::string dump(const ordered_json &j) { return j.dump(2) + "\n"; }

ordered_json report_skeleton(const Space &s) {
  ordered_json j;
  j["space"] = space_fragment(s);
  j["graph"] = graph_fragment(s);
  j["acs"] = nullptr;
  j["sections"] = nullptr;
  j["cohomology"] = nullptr;
  j["warnings"] = s.warnings;
  return j;
}

}  // namespace

std::string render_dot(const Space &s) {
  const GKMGraph &g = s.graph;
  std::ostringstream os;
  os << "graph gkm {\n";
  os << "  // " << s.spec.datum.name() << " / k=" << s.spec.k_raw << "\n";
  for (size_t v = 0; v < g.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << word_str(s.roots(), g.representative(v)) << "\"];\n";
  for (const EdgeRecord &e : g.edge_list())
    os << "  v" << e.source << " -- v" << e.target << " [label=\"" << e.direction.rep.str()
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string graph_json(const Space &s) { return dump(report_skeleton(s)); }

std::string analyze_json(const Space &s, uint64_t seed, int num_xi) {
  if (num_xi < 0) throw spec_error("num_xi must be non-negative");
  const GKMGraph &g = s.graph;
  const RootSystem &R = s.roots();

  ordered_json j = report_skeleton(s);
  j["space"]["seed"] = seed;
  j["space"]["num_xi"] = num_xi;
  j["acs"] = check_acs_condition(g);

  // One shared xi panel: seeded random regular covectors plus every
  // chamber representative.
  Rng rng(seed);
  std::vector<Covector> random_xis;
  for (int i = 0; i < num_xi; ++i) random_xis.push_back(random_regular_xi(R, rng));
  std::vector<Covector> chambers = chamber_representatives(R, *g.weyl);

  std::vector<Section> sections = enumerate_sections(g);
  if (sections.empty() && check_acs_condition(g))
    throw invariant_error("ACS condition holds but no sections were produced");
  if (!sections.empty() && !check_acs_condition(g))
    throw invariant_error("sections exist although the ACS condition fails");

  auto orbits = section_orbits(g);
  ordered_json jsections = ordered_json::array();
  for (const Section &sec : sections) {
    ordered_json js;
    ordered_json signs;
    for (const auto &orbit : orbits) {
      const RootClass &base = orbit.front();
      signs[base.rep.str()] = sec.choice.at(base) == base.rep ? "+" : "-";
    }
    js["signs"] = std::move(signs);
    ordered_json d0 = ordered_json::array();
    for (const Root &r : sec.delta0()) d0.push_back(r.c);
    js["delta0"] = std::move(d0);

    AxialFunction axial(g, sec);
    AxialCheck check = verify_axial(axial);
    if (!check.ok())
      throw invariant_error("axial axiom " + std::to_string(check.violated_axiom) +
                            " failed on an enumerated section: " + check.detail);
    js["axial_axioms"] = "pass";

    std::vector<Covector> all_xi = random_xis;
    all_xi.insert(all_xi.end(), chambers.begin(), chambers.end());
    bool invariant = betti_invariance(axial, all_xi);
    js["betti"] = betti(Orientation(axial, chambers.front())).counts;
    js["betti_invariant"] = invariant;
    if (!invariant) throw invariant_error("Betti numbers depend on xi for a section");

    bool integrable = false;
    ordered_json morse;
    for (size_t ci = 0; ci < chambers.size(); ++ci) {
      MorseResult res = find_morse(Orientation(axial, chambers[ci]));
      if (res.found()) {
        integrable = true;
        morse["chamber"] = ci;
        ordered_json vals = ordered_json::array();
        for (const Rational &x : res.assignment->values) vals.push_back(rat_str(x));
        morse["values"] = std::move(vals);
        break;
      }
      if (ci == 0) morse["cycle"] = res.cycle;
    }
    if (integrable) morse.erase("cycle");
    js["integrable"] = integrable;

    bool oracle = closure_oracle(sec, g.delta_k, R);
    js["closure_oracle"] = oracle;
    if (oracle != integrable)
      throw invariant_error("closure oracle disagrees with the chamber search (section " +
                            js["signs"].dump() + ")");
    js["morse"] = std::move(morse);
    jsections.push_back(std::move(js));
  }
  j["sections"] = std::move(jsections);
  return dump(j);
}

namespace {

Polynomial random_monomial(const RootSystem &R, Rng &rng, int max_degree) {
  const int n = R.rank();
  int d = static_cast<int>(rng.range(0, max_degree));
  Polynomial::Exponents e(n, 0);
  for (int i = 0; i < d; ++i) ++e[rng.below(n)];
  long c = rng.range(1, 9) * (rng.below(2) ? -1 : 1);
  return Polynomial::monomial(e, Rational(c));
}

Polynomial random_poly(const RootSystem &R, Rng &rng, int max_degree) {
  Polynomial p(R.rank());
  long parts = rng.range(1, 3);
  for (long i = 0; i < parts; ++i) p = p + random_monomial(R, rng, max_degree);
  return p;
}

// W_K-invariant sample: the Reynolds average of a random monomial (falling
// back to the invariant quadratic if the average vanishes repeatedly).
Polynomial random_invariant(const RootSystem &R, const WeylGroup &WK, Rng &rng, int max_degree) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    Polynomial p = symmetrize(random_monomial(R, rng, max_degree), WK);
    if (!p.is_zero()) return p;
  }
  return invariant_quadratic(R);
}

}  // namespace

std::string cohomology_json(const Space &s, uint64_t seed, int trials, int max_degree) {
  if (trials < 0) throw spec_error("trials must be non-negative");
  if (max_degree < 0 || max_degree > 8) throw spec_error("max_degree must be in 0..8");
  const GKMGraph &g = s.graph;
  const RootSystem &R = s.roots();

  ordered_json j = report_skeleton(s);
  j["space"]["seed"] = seed;
  j["space"]["trials"] = trials;
  j["space"]["max_degree"] = max_degree;

  Rng rng(seed);
  const Polynomial one = Polynomial::constant(R.rank(), 1);
  const Polynomial invq = invariant_quadratic(R);
  int membership = 0, homomorphism = 0, middle = 0, linearity = 0, equivariance = 0, fixed = 0;
  int failures = 0;
  std::string sample_f1, sample_f2;

  for (int t = 0; t < trials; ++t) {
    Polynomial f1 = random_invariant(R, *g.weyl_k, rng, max_degree);
    Polynomial f2 = random_poly(R, rng, max_degree);
    Polynomial f1b = random_invariant(R, *g.weyl_k, rng, max_degree);
    Polynomial f2b = random_poly(R, rng, max_degree);
    if (t == 0) {
      sample_f1 = f1.str();
      sample_f2 = f2.str();
    }

    GKMClass k1 = borel_map(f1, f2, g);
    GKMClass k2 = borel_map(f1b, f2b, g);

    bool ok = gkm_membership(k1, g);
    membership += ok;
    failures += !ok;

    ok = class_product(k1, k2) == borel_map(f1 * f1b, f2 * f2b, g);
    homomorphism += ok;
    failures += !ok;

    ok = borel_map(f1 * invq, f2, g) == borel_map(f1, invq * f2, g);
    middle += ok;
    failures += !ok;

    ok = borel_map(f1, f2 * f2b, g) == class_product(k1, constant_class(f2b, g));
    linearity += ok;
    failures += !ok;

    bool eq = true;
    size_t extra = static_cast<size_t>(rng.below(static_cast<long>(g.weyl->order())));
    std::vector<WeylElement> sample = g.weyl->generators;
    sample.push_back(g.weyl->elements[extra]);
    for (const WeylElement &w : sample)
      if (!(weyl_act_class(w, k1, g) == borel_map(f1, weyl_act_poly(w, f2), g))) eq = false;
    equivariance += eq;
    failures += !eq;

    GKMClass base = borel_map(f1, one, g);
    bool fx = true;
    for (const WeylElement &w : sample)
      if (!(weyl_act_class(w, base, g) == base)) fx = false;
    fixed += fx;
    failures += !fx;
  }

  ordered_json jc;
  jc["trials"] = trials;
  jc["failures"] = failures;
  if (trials > 0) {
    ordered_json sample;
    sample["f1"] = sample_f1;
    sample["f2"] = sample_f2;
    jc["sample"] = std::move(sample);
  }
  ordered_json checks;
  checks["membership"] = membership;
  checks["homomorphism"] = homomorphism;
  checks["middle_factor"] = middle;
  checks["linearity"] = linearity;
  checks["equivariance"] = equivariance;
  checks["invariant_fixed"] = fixed;
  jc["checks"] = std::move(checks);
  j["cohomology"] = std::move(jc);

  if (failures > 0)
    throw invariant_error("Borel-to-GKM identities failed " + std::to_string(failures) +
                          " time(s) over " + std::to_string(trials) + " trials");
  return dump(j);
}

}  // namespace gkm
