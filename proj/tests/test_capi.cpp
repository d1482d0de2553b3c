#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <string>

#include <fstream>

#include <json.hpp>

#include "corelattice/corelattice.h"
#include "schema_check.hpp"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  clx_string_free(s);
  return out;
}

void expect_schema(const std::string& doc, const std::string& schema_name) {
  std::ifstream in(std::string(SCHEMA_DIR) + "/" + schema_name);
  REQUIRE(in.good());
  const json schema = json::parse(in);
  std::string error;
  const bool ok = schema_check::validate(json::parse(doc), schema, &error);
  INFO(schema_name, ": ", error, " in ", doc);
  CHECK(ok);
}

}  // namespace

TEST_CASE("version and null handling") {
  CHECK(std::string(clx_version()) == "0.1.0");
  CHECK(clx_numset_parse(nullptr, nullptr) == CLX_ERR_NULL);
  clx_numset* t = nullptr;
  CHECK(clx_numset_parse("0,1,4,5,7,->", nullptr) == CLX_ERR_NULL);
  CHECK(clx_numset_atom_monoid(nullptr, &t) == CLX_ERR_NULL);
}

TEST_CASE("numset surface") {
  clx_numset* t = nullptr;
  REQUIRE(clx_numset_parse("0,1,4,5,7,→", &t) == CLX_OK);
  CHECK(clx_numset_frobenius(t) == 6);
  CHECK(clx_numset_genus(t) == 3);

  char* text = nullptr;
  REQUIRE(clx_numset_format(t, &text) == CLX_OK);
  CHECK(take(text) == "0,1,4,5,7,→");

  int flag = -1;
  REQUIRE(clx_numset_contains(t, 4, &flag) == CLX_OK);
  CHECK(flag == 1);
  REQUIRE(clx_numset_contains(t, 6, &flag) == CLX_OK);
  CHECK(flag == 0);
  CHECK(clx_numset_contains(t, -3, &flag) == CLX_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(clx_last_error()) > 0);

  int64_t* gaps = nullptr;
  size_t glen = 0;
  REQUIRE(clx_numset_gaps(t, &gaps, &glen) == CLX_OK);
  REQUIRE(glen == 3);
  CHECK(gaps[0] == 2);
  CHECK(gaps[2] == 6);
  clx_i64_array_free(gaps);

  clx_numset* atoms = nullptr;
  REQUIRE(clx_numset_atom_monoid(t, &atoms) == CLX_OK);
  REQUIRE(clx_numset_format(atoms, &text) == CLX_OK);
  CHECK(take(text) == "0,4,7,→");

  clx_numset* dual = nullptr;
  REQUIRE(clx_numset_dual(t, &dual) == CLX_OK);
  REQUIRE(clx_numset_format(dual, &text) == CLX_OK);
  CHECK(take(text) == "0,3,4,7,→");

  REQUIRE(clx_numset_is_semigroup(t, &flag) == CLX_OK);
  CHECK(flag == 0);
  // non-semigroups are rejected where a semigroup is required
  int64_t* arr = nullptr;
  size_t len = 0;
  CHECK(clx_numset_missing_pairs(t, &arr, &len) == CLX_ERR_INVALID_ARGUMENT);

  clx_numset_free(t);
  clx_numset_free(atoms);
  clx_numset_free(dual);

  const int64_t gens[] = {4, 5, 6, 7};
  clx_numset* s = nullptr;
  REQUIRE(clx_numset_from_generators(gens, 4, &s) == CLX_OK);
  REQUIRE(clx_numset_missing_pairs(s, &arr, &len) == CLX_OK);
  REQUIRE(len == 2);
  CHECK(arr[0] == 1);
  CHECK(arr[1] == 2);
  clx_i64_array_free(arr);
  REQUIRE(clx_numset_minimal_generators(s, &arr, &len) == CLX_OK);
  CHECK(len == 4);
  clx_i64_array_free(arr);
  clx_numset_free(s);

  const int64_t bad[] = {4, 6};
  CHECK(clx_numset_from_generators(bad, 2, &s) == CLX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("partition surface") {
  clx_numset* t = nullptr;
  REQUIRE(clx_numset_parse("0,1,4,5,7,->", &t) == CLX_OK);
  clx_partition* p = nullptr;
  REQUIRE(clx_phi(t, &p) == CLX_OK);
  char* text = nullptr;
  REQUIRE(clx_partition_format(p, &text) == CLX_OK);
  CHECK(take(text) == "(4,2,2)");

  int64_t size = 0;
  REQUIRE(clx_partition_size(p, &size) == CLX_OK);
  CHECK(size == 8);

  int64_t* hooks = nullptr;
  size_t len = 0;
  REQUIRE(clx_partition_hook_set(p, &hooks, &len) == CLX_OK);
  REQUIRE(len == 5);
  CHECK(hooks[4] == 6);
  clx_i64_array_free(hooks);

  int flag = 0;
  REQUIRE(clx_partition_is_core(p, 4, &flag) == CLX_OK);
  CHECK(flag == 1);
  REQUIRE(clx_partition_is_core(p, 2, &flag) == CLX_OK);
  CHECK(flag == 0);
  CHECK(clx_partition_is_core(p, 0, &flag) == CLX_ERR_INVALID_ARGUMENT);

  clx_partition* conj = nullptr;
  REQUIRE(clx_partition_conjugate(p, &conj) == CLX_OK);
  clx_numset* back = nullptr;
  REQUIRE(clx_phi_inverse(conj, &back) == CLX_OK);
  REQUIRE(clx_numset_format(back, &text) == CLX_OK);
  CHECK(take(text) == "0,3,4,7,→");

  REQUIRE(clx_partition_hook_grid(p, &text) == CLX_OK);
  CHECK(take(text).find("| 6 | 5 | 2 | 1 |") != std::string::npos);

  clx_partition_free(p);
  clx_partition_free(conj);
  clx_numset_free(t);
  clx_numset_free(back);

  CHECK(clx_partition_parse("(2,3)", &p) == CLX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("apery surface") {
  clx_numset* t = nullptr;
  REQUIRE(clx_numset_parse("0,1,4,5,7,->", &t) == CLX_OK);
  clx_apery* ap = nullptr;
  REQUIRE(clx_apery_of(t, 4, &ap) == CLX_OK);
  char* text = nullptr;
  REQUIRE(clx_apery_format(ap, &text) == CLX_OK);
  CHECK(take(text) == "a=4;[0,2,1]");
  CHECK(clx_apery_modulus(ap) == 4);

  int64_t v = 0;
  REQUIRE(clx_apery_genus(ap, &v) == CLX_OK);
  CHECK(v == 3);
  REQUIRE(clx_apery_frobenius(ap, &v) == CLX_OK);
  CHECK(v == 6);
  REQUIRE(clx_apery_partition_size(ap, &v) == CLX_OK);
  CHECK(v == 8);

  clx_apery* conj = nullptr;
  REQUIRE(clx_apery_conjugate(ap, &conj) == CLX_OK);
  REQUIRE(clx_apery_format(conj, &text) == CLX_OK);
  CHECK(take(text) == "a=4;[2,2,0]");

  clx_apery* zero = nullptr;
  REQUIRE(clx_apery_parse("a=3;[0,0]", &zero) == CLX_OK);
  CHECK(clx_apery_frobenius(zero, &v) == CLX_ERR_DOMAIN);

  // 2 is not a valid coordinate modulus for this set
  clx_apery* bad = nullptr;
  CHECK(clx_apery_of(t, 2, &bad) == CLX_ERR_INVALID_ARGUMENT);

  clx_apery_free(ap);
  clx_apery_free(conj);
  clx_apery_free(zero);
  clx_numset_free(t);

  char* dec = nullptr;
  REQUIRE(clx_count_acores_by_parts(12, 40, 1, &dec) == CLX_OK);
  CHECK(take(dec) == "47626016970");  // C(51,11)
}

TEST_CASE("polytope surface") {
  const int64_t b8[] = {8};
  char* out = nullptr;
  REQUIRE(clx_core_stats_json(3, b8, 1, 0, 1, &out) == CLX_OK);
  {
    const std::string doc = take(out);
    expect_schema(doc, "stats.schema.json");
    const json j = json::parse(doc);
    CHECK(j.at("count") == 15);
    CHECK(j.at("max") == 21);
    CHECK(j.at("mean").at("num") == 7);
    CHECK(j.at("mean").at("den") == 1);
    CHECK(j.at("argmax") == json::array({5, 2}));
  }
  REQUIRE(clx_core_stats_json(3, b8, 1, 1, 1, &out) == CLX_OK);
  {
    const json j = json::parse(take(out));
    CHECK(j.at("count") == 10);
  }
  const int64_t b6[] = {6};
  CHECK(clx_core_stats_json(4, b6, 1, 0, 1, &out) == CLX_ERR_INVALID_ARGUMENT);
  CHECK(std::string(clx_last_error()).find("unbounded cone") != std::string::npos);

  clx_core_iter* it = nullptr;
  REQUIRE(clx_core_iter_new(3, b8, 1, 0, &it) == CLX_OK);
  int count = 0;
  bool first = true;
  for (;;) {
    clx_apery* pt = nullptr;
    const clx_status st = clx_core_iter_next(it, &pt);
    if (st == CLX_DONE) break;
    REQUIRE(st == CLX_OK);
    if (first) {
      char* text = nullptr;
      clx_apery_format(pt, &text);
      CHECK(take(text) == "a=3;[0,0]");
      first = false;
    }
    ++count;
    clx_apery_free(pt);
  }
  CHECK(count == 15);
  clx_core_iter_free(it);

  // oversemigroup points through the same iterator
  REQUIRE(clx_core_iter_new(3, b8, 1, 1, &it) == CLX_OK);
  count = 0;
  for (;;) {
    clx_apery* pt = nullptr;
    if (clx_core_iter_next(it, &pt) == CLX_DONE) break;
    ++count;
    clx_apery_free(pt);
  }
  CHECK(count == 10);
  clx_core_iter_free(it);

  REQUIRE(clx_count_oversemigroups(3, 8, &out) == CLX_OK);
  CHECK(take(out) == "10");
  REQUIRE(clx_oversemigroups_by_genus_json(3, 8, &out) == CLX_OK);
  {
    const std::string doc = take(out);
    expect_schema(doc, "overs.schema.json");
    const json j = json::parse(doc);
    CHECK(j.at("total") == 10);
    CHECK(j.at("strata").at("3") == 2);
  }
  REQUIRE(clx_ratio_table_json(2, 11, &out) == CLX_OK);
  {
    const std::string doc = take(out);
    expect_schema(doc, "ratio.schema.json");
    const json j = json::parse(doc);
    CHECK(j.at("rows").size() == 5);  // b = 3, 5, 7, 9, 11
  }
}

TEST_CASE("antiatom, gamma and tree surface") {
  clx_numset* s = nullptr;
  REQUIRE(clx_numset_parse("0,4,→", &s) == CLX_OK);
  char* out = nullptr;
  REQUIRE(clx_anti_atom_json(s, 1, &out) == CLX_OK);
  {
    const std::string doc = take(out);
    expect_schema(doc, "antiatom.schema.json");
    const json j = json::parse(doc);
    CHECK(j.at("P") == 3);
    CHECK(j.at("M") == 2);
    CHECK(j.at("witnesses").size() == 3);
  }
  clx_numset_free(s);

  REQUIRE(clx_numset_parse("0,1,3,→", &s) == CLX_OK);
  CHECK(clx_anti_atom_json(s, 0, &out) == CLX_ERR_INVALID_ARGUMENT);
  CHECK(std::string(clx_last_error()).find("not closed: 1+1=2 missing") !=
        std::string::npos);
  clx_numset_free(s);

  REQUIRE(clx_gamma_json(4, &out) == CLX_OK);
  {
    const std::string doc = take(out);
    expect_schema(doc, "gammatable.schema.json");
    const json j = json::parse(doc);
    REQUIRE(j.at("rows").size() == 4);
    CHECK(j.at("rows")[2].at("gamma").at("num") == 3);
    CHECK(j.at("rows")[2].at("gamma").at("den") == 4);
  }
  CHECK(clx_gamma_json(200, &out) == CLX_ERR_BUDGET);

  REQUIRE(clx_count_semigroups_by_frobenius(4, &out) == CLX_OK);
  CHECK(take(out) == "2");

  clx_tree_iter* it = nullptr;
  REQUIRE(clx_tree_iter_new(2, 1, &it) == CLX_OK);
  int nodes = 0;
  for (;;) {
    char* line = nullptr;
    const clx_status st = clx_tree_iter_next(it, &line);
    if (st == CLX_DONE) break;
    REQUIRE(st == CLX_OK);
    const std::string doc = take(line);
    expect_schema(doc, "treenode.schema.json");
    const json j = json::parse(doc);
    CHECK(j.contains("gens"));
    CHECK(j.contains("P"));
    ++nodes;
  }
  CHECK(nodes == 4);  // genus 0..2: 1 + 1 + 2
  clx_tree_iter_free(it);

  REQUIRE(clx_tree_census_json(5, &out) == CLX_OK);
  {
    const std::string doc = take(out);
    expect_schema(doc, "census.schema.json");
    CHECK(json::parse(doc).at("census") == json::array({1, 1, 2, 4, 7, 12}));
  }

  REQUIRE(clx_tree_dot(1, 0, &out) == CLX_OK);
  CHECK(take(out).find("digraph") != std::string::npos);
}

TEST_CASE("verify surface") {
  char* out = nullptr;
  REQUIRE(clx_verify_suites(&out) == CLX_OK);
  {
    const json names = json::parse(take(out));
    CHECK(names.size() == 13);
    CHECK(std::find(names.begin(), names.end(), "anderson") != names.end());
  }
  REQUIRE(clx_verify("olsson-stanton", &out) == CLX_OK);
  {
    const std::string doc = take(out);
    expect_schema(doc, "verify.schema.json");
    CHECK(json::parse(doc).at("pass") == true);
  }
  CHECK(clx_verify("no-such-suite", &out) == CLX_ERR_INVALID_ARGUMENT);
}
