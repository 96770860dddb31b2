// Command-line front end; talks to the library exclusively through the
// C API in gkm.h. Exit codes: 0 success, 2 user error, 3 violated
// mathematical invariant.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gkm.h"

namespace {

struct SpaceHandle {
  gkm_space *ptr = nullptr;
  ~SpaceHandle() { gkm_space_destroy(ptr); }
};

struct StringHandle {
  char *ptr = nullptr;
  ~StringHandle() { gkm_string_free(ptr); }
};

int status_exit(gkm_status st) {
  std::fprintf(stderr, "error: %s\n", gkm_last_error());
  return st == GKM_ERROR_INVARIANT ? 3 : 2;
}

int open_space(const std::string &type, const std::string &k, SpaceHandle &handle) {
  gkm_status st = gkm_space_create(type.c_str(), k.c_str(), &handle.ptr);
  if (st != GKM_OK) return status_exit(st);
  int warnings = 0;
  gkm_space_warning_count(handle.ptr, &warnings);
  for (int i = 0; i < warnings; ++i) {
    const char *w = nullptr;
    if (gkm_space_warning(handle.ptr, i, &w) == GKM_OK)
      std::fprintf(stderr, "warning: %s\n", w);
  }
  return 0;
}

int write_output(const std::string &path, const char *data) {
  if (path.empty()) {
    std::cout << data;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << data;
  out.close();
  if (!out) {
    std::fprintf(stderr, "error: could not write %s\n", path.c_str());
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"GKM graphs of homogeneous spaces G/K: almost complex "
               "structures, Betti numbers, Morse functions and equivariant "
               "cohomology, over exact arithmetic"};
  app.require_subcommand(1);

  std::string type, k, format = "json", out_path;
  std::uint64_t seed = 1;
  int num_xi = 20, trials = 100, max_degree = 3;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--type", type, "Cartan type, e.g. A2, B3, G2")->required();
    cmd->add_option("--k", k,
                    "K roots: torus | long | short | parabolic:i,j | "
                    "explicit:[c,..];[c,..]")
        ->required();
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };

  CLI::App *cmd_graph = app.add_subcommand("graph", "emit the GKM graph");
  add_common(cmd_graph);
  cmd_graph->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App *cmd_analyze =
      app.add_subcommand("analyze", "sections, Betti numbers, Morse functions");
  add_common(cmd_analyze);
  cmd_analyze->add_option("--seed", seed, "random seed (echoed in the report)");
  cmd_analyze->add_option("--num-xi", num_xi, "random regular covectors per section");

  CLI::App *cmd_cohomology =
      app.add_subcommand("cohomology", "Borel-to-GKM map property checks");
  add_common(cmd_cohomology);
  cmd_cohomology->add_option("--seed", seed, "random seed (echoed in the report)");
  cmd_cohomology->add_option("--trials", trials, "number of random (f1, f2) pairs");
  cmd_cohomology->add_option("--max-degree", max_degree, "degree bound for random inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  SpaceHandle space;
  if (int rc = open_space(type, k, space)) return rc;

  StringHandle text;
  gkm_status st = GKM_OK;
  if (cmd_graph->parsed()) {
    st = format == "dot" ? gkm_space_render_dot(space.ptr, &text.ptr)
                         : gkm_space_graph_json(space.ptr, &text.ptr);
  } else if (cmd_analyze->parsed()) {
    st = gkm_space_analyze_json(space.ptr, seed, num_xi, &text.ptr);
  } else {
    st = gkm_space_cohomology_json(space.ptr, seed, trials, max_degree, &text.ptr);
  }
  if (st != GKM_OK) return status_exit(st);
  return write_output(out_path, text.ptr);
}
