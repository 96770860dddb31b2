#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"

#include "gkm.h"

namespace {

struct SpaceGuard {
  gkm_space *ptr = nullptr;
  ~SpaceGuard() { gkm_space_destroy(ptr); }
};

struct StringGuard {
  char *ptr = nullptr;
  ~StringGuard() { gkm_string_free(ptr); }
};

}  // namespace

TEST_CASE("create and query the flag manifold of SU(3)") {
  SpaceGuard s;
  REQUIRE(gkm_space_create("A2", "torus", &s.ptr) == GKM_OK);
  REQUIRE(s.ptr != nullptr);

  int i = 0;
  long l = 0;
  CHECK((gkm_space_rank(s.ptr, &i) == GKM_OK && i == 2));
  CHECK((gkm_space_vertex_count(s.ptr, &i) == GKM_OK && i == 6));
  CHECK((gkm_space_edge_count(s.ptr, &i) == GKM_OK && i == 9));
  CHECK((gkm_space_degree(s.ptr, &i) == GKM_OK && i == 3));
  CHECK((gkm_space_is_simple(s.ptr, &i) == GKM_OK && i == 1));
  CHECK((gkm_space_euler_characteristic(s.ptr, &l) == GKM_OK && l == 6));
  CHECK((gkm_space_acs_condition(s.ptr, &i) == GKM_OK && i == 1));
  CHECK((gkm_space_section_count(s.ptr, &l) == GKM_OK && l == 8));
  CHECK((gkm_space_warning_count(s.ptr, &i) == GKM_OK && i == 0));
}

TEST_CASE("error paths use status codes, not exceptions") {
  SpaceGuard s;
  CHECK(gkm_space_create("Z9", "torus", &s.ptr) == GKM_ERROR_INVALID_SPEC);
  CHECK(s.ptr == nullptr);
  CHECK(std::string(gkm_last_error()).find("Z9") != std::string::npos);

  CHECK(gkm_space_create("A2", "everything", &s.ptr) == GKM_ERROR_INVALID_SPEC);
  CHECK(gkm_space_create(nullptr, "torus", &s.ptr) == GKM_ERROR_INVALID_ARGUMENT);

  int out = 0;
  CHECK(gkm_space_rank(nullptr, &out) == GKM_ERROR_INVALID_ARGUMENT);
  REQUIRE(gkm_space_create("A2", "torus", &s.ptr) == GKM_OK);
  CHECK(gkm_space_rank(s.ptr, nullptr) == GKM_ERROR_INVALID_ARGUMENT);
  CHECK(gkm_space_warning(s.ptr, 5, nullptr) == GKM_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("K = G is rejected and the closure warning is surfaced") {
  SpaceGuard s;
  CHECK(gkm_space_create("B2", "short", &s.ptr) == GKM_ERROR_INVALID_SPEC);
  std::string err = gkm_last_error();
  CHECK(err.find("point") != std::string::npos);
  CHECK(err.find("closure enlarged") != std::string::npos);
}

TEST_CASE("closure enlargement warning on a surviving space") {
  SpaceGuard s;
  // two long G2 roots whose closure is the full long A2
  REQUIRE(gkm_space_create("G2", "explicit:[0,1];[3,2]", &s.ptr) == GKM_OK);
  int warnings = 0;
  REQUIRE(gkm_space_warning_count(s.ptr, &warnings) == GKM_OK);
  REQUIRE(warnings == 1);
  const char *w = nullptr;
  REQUIRE(gkm_space_warning(s.ptr, 0, &w) == GKM_OK);
  CHECK(std::string(w).find("closure enlarged") != std::string::npos);

  int v = 0;
  CHECK((gkm_space_vertex_count(s.ptr, &v) == GKM_OK && v == 2));
  int e = 0;
  CHECK((gkm_space_edge_count(s.ptr, &e) == GKM_OK && e == 3));
}

TEST_CASE("DOT rendering") {
  SpaceGuard s;
  REQUIRE(gkm_space_create("G2", "long", &s.ptr) == GKM_OK);
  StringGuard dot;
  REQUIRE(gkm_space_render_dot(s.ptr, &dot.ptr) == GKM_OK);
  std::string text = dot.ptr;
  CHECK(text.find("graph gkm {") == 0);
  CHECK(text.find("v0 -- v1") != std::string::npos);
  size_t count = 0;
  for (size_t pos = text.find("--"); pos != std::string::npos; pos = text.find("--", pos + 1))
    ++count;
  CHECK(count == 3);
}

TEST_CASE("graph JSON carries the report schema") {
  SpaceGuard s;
  REQUIRE(gkm_space_create("A1", "torus", &s.ptr) == GKM_OK);
  StringGuard text;
  REQUIRE(gkm_space_graph_json(s.ptr, &text.ptr) == GKM_OK);
  auto j = nlohmann::json::parse(text.ptr);
  for (const char *key : {"space", "graph", "acs", "sections", "cohomology", "warnings"})
    CHECK(j.contains(key));
  CHECK(j["graph"]["vertices"] == 2);
  CHECK(j["graph"]["edges"] == 1);
  CHECK(j["acs"].is_null());
}

TEST_CASE("analyze JSON is byte-stable and exact") {
  SpaceGuard s;
  REQUIRE(gkm_space_create("G2", "long", &s.ptr) == GKM_OK);
  StringGuard a, b;
  REQUIRE(gkm_space_analyze_json(s.ptr, 7, 5, &a.ptr) == GKM_OK);
  REQUIRE(gkm_space_analyze_json(s.ptr, 7, 5, &b.ptr) == GKM_OK);
  CHECK(std::string(a.ptr) == std::string(b.ptr));

  auto j = nlohmann::json::parse(a.ptr);
  CHECK(j["acs"] == true);
  CHECK(j["sections"].size() == 2);
  for (const auto &sec : j["sections"]) {
    CHECK(sec["integrable"] == false);
    CHECK(sec["closure_oracle"] == false);
    CHECK(sec["axial_axioms"] == "pass");
    CHECK(sec["betti_invariant"] == true);
    CHECK(sec["morse"].contains("cycle"));
  }
  CHECK(j["space"]["seed"] == 7);
}

TEST_CASE("cohomology JSON reports clean runs") {
  SpaceGuard s;
  REQUIRE(gkm_space_create("A2", "parabolic:2", &s.ptr) == GKM_OK);
  StringGuard text;
  REQUIRE(gkm_space_cohomology_json(s.ptr, 11, 10, 3, &text.ptr) == GKM_OK);
  auto j = nlohmann::json::parse(text.ptr);
  CHECK(j["cohomology"]["trials"] == 10);
  CHECK(j["cohomology"]["failures"] == 0);
  CHECK(j["cohomology"]["checks"]["membership"] == 10);

  StringGuard empty;
  REQUIRE(gkm_space_cohomology_json(s.ptr, 11, 0, 3, &empty.ptr) == GKM_OK);
  auto j0 = nlohmann::json::parse(empty.ptr);
  CHECK(j0["cohomology"]["trials"] == 0);
}

TEST_CASE("version string") { CHECK(std::string(gkm_version()).find('.') != std::string::npos); }
