#include "gkm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gkm/analysis.hpp"
#include "gkm/axial.hpp"
#include "gkm/errors.hpp"

struct gkm_space {
  gkm::Space space;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string &msg) { t_last_error = msg; }

template <typename Fn>
gkm_status guarded(Fn &&fn) {
  try {
    fn();
    return GKM_OK;
  } catch (const gkm::spec_error &e) {
    set_error(e.what());
    return GKM_ERROR_INVALID_SPEC;
  } catch (const gkm::invariant_error &e) {
    set_error(e.what());
    return GKM_ERROR_INVARIANT;
  } catch (const std::exception &e) {
    set_error(e.what());
    return GKM_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return GKM_ERROR_INTERNAL;
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gkm_status check_args(const void *space, const void *out) {
  if (!space || !out) {
    set_error("null argument");
    return GKM_ERROR_INVALID_ARGUMENT;
  }
  return GKM_OK;
}

}  // namespace

extern "C" {

const char *gkm_version(void) { return "1.0.0"; }

const char *gkm_last_error(void) { return t_last_error.c_str(); }

gkm_status gkm_space_create(const char *type, const char *k_spec, gkm_space **out) {
  if (!type || !k_spec || !out) {
    set_error("null argument");
    return GKM_ERROR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    gkm::ResolvedSpec resolved;
    try {
      resolved = gkm::resolve_space(type, k_spec);
      auto handle = new gkm_space{gkm::build_space(resolved)};
      *out = handle;
    } catch (gkm::spec_error &e) {
      // Keep any resolution warnings visible alongside the failure.
      std::string msg = e.what();
      for (const std::string &w : resolved.warnings) msg += "\nwarning: " + w;
      throw gkm::spec_error(msg);
    }
  });
}

void gkm_space_destroy(gkm_space *space) { delete space; }

gkm_status gkm_space_rank(const gkm_space *space, int *out) {
  if (gkm_status s = check_args(space, out)) return s;
  *out = space->space.roots().rank();
  return GKM_OK;
}

gkm_status gkm_space_vertex_count(const gkm_space *space, int *out) {
  if (gkm_status s = check_args(space, out)) return s;
  *out = static_cast<int>(space->space.graph.vertex_count());
  return GKM_OK;
}

gkm_status gkm_space_edge_count(const gkm_space *space, int *out) {
  if (gkm_status s = check_args(space, out)) return s;
  *out = static_cast<int>(space->space.graph.edge_count());
  return GKM_OK;
}

gkm_status gkm_space_degree(const gkm_space *space, int *out) {
  if (gkm_status s = check_args(space, out)) return s;
  *out = static_cast<int>(space->space.graph.degree());
  return GKM_OK;
}

gkm_status gkm_space_is_simple(const gkm_space *space, int *out) {
  if (gkm_status s = check_args(space, out)) return s;
  return guarded([&] { *out = gkm::is_simple(space->space.graph) ? 1 : 0; });
}

gkm_status gkm_space_euler_characteristic(const gkm_space *space, long *out) {
  if (gkm_status s = check_args(space, out)) return s;
  *out = gkm::euler_characteristic(space->space.graph);
  return GKM_OK;
}

gkm_status gkm_space_acs_condition(const gkm_space *space, int *out) {
  if (gkm_status s = check_args(space, out)) return s;
  return guarded([&] { *out = gkm::check_acs_condition(space->space.graph) ? 1 : 0; });
}

gkm_status gkm_space_section_count(const gkm_space *space, long *out) {
  if (gkm_status s = check_args(space, out)) return s;
  return guarded(
      [&] { *out = static_cast<long>(gkm::enumerate_sections(space->space.graph).size()); });
}

gkm_status gkm_space_warning_count(const gkm_space *space, int *out) {
  if (gkm_status s = check_args(space, out)) return s;
  *out = static_cast<int>(space->space.warnings.size());
  return GKM_OK;
}

gkm_status gkm_space_warning(const gkm_space *space, int index, const char **out) {
  if (gkm_status s = check_args(space, out)) return s;
  if (index < 0 || index >= static_cast<int>(space->space.warnings.size())) {
    set_error("warning index out of range");
    return GKM_ERROR_INVALID_ARGUMENT;
  }
  *out = space->space.warnings[static_cast<size_t>(index)].c_str();
  return GKM_OK;
}

gkm_status gkm_space_render_dot(const gkm_space *space, char **out) {
  if (gkm_status s = check_args(space, out)) return s;
  return guarded([&] { *out = dup_string(gkm::render_dot(space->space)); });
}

gkm_status gkm_space_graph_json(const gkm_space *space, char **out) {
  if (gkm_status s = check_args(space, out)) return s;
  return guarded([&] { *out = dup_string(gkm::graph_json(space->space)); });
}

gkm_status gkm_space_analyze_json(const gkm_space *space, uint64_t seed, int num_xi, char **out) {
  if (gkm_status s = check_args(space, out)) return s;
  return guarded([&] { *out = dup_string(gkm::analyze_json(space->space, seed, num_xi)); });
}

gkm_status gkm_space_cohomology_json(const gkm_space *space, uint64_t seed, int trials,
                                     int max_degree, char **out) {
  if (gkm_status s = check_args(space, out)) return s;
  return guarded(
      [&] { *out = dup_string(gkm::cohomology_json(space->space, seed, trials, max_degree)); });
}

void gkm_string_free(char *s) { std::free(s); }

}  // extern "C"
