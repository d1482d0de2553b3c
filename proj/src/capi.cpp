#include "corelattice/corelattice.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "corelattice/antiatom.hpp"
#include "corelattice/apery.hpp"
#include "corelattice/bigint.hpp"
#include "corelattice/numset.hpp"
#include "corelattice/partition.hpp"
#include "corelattice/polytope.hpp"
#include "corelattice/text.hpp"
#include "corelattice/tree.hpp"
#include "corelattice/verify.hpp"

using namespace corelattice;

struct clx_numset {
  NumericalSet value;
};
struct clx_partition {
  Partition value;
};
struct clx_apery {
  AperyTuple value;
};
struct clx_core_iter {
  std::int64_t a = 0;
  std::vector<std::vector<std::int64_t>> points;
  std::size_t next = 0;
};
struct clx_tree_iter {
  std::vector<TreeNode> nodes;
  std::size_t next = 0;
};

namespace {

thread_local std::string g_last_error;

clx_status fail(clx_status code, const char* what) {
  g_last_error = what;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int64_t* dup_array(const std::vector<std::int64_t>& v) {
  int64_t* out = new int64_t[v.size() ? v.size() : 1];
  if (!v.empty()) std::memcpy(out, v.data(), v.size() * sizeof(int64_t));
  return out;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
clx_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const BudgetError& e) {
    return fail(CLX_ERR_BUDGET, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CLX_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(CLX_ERR_DOMAIN, e.what());
  } catch (const std::logic_error& e) {
    return fail(CLX_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CLX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CLX_ERR_INTERNAL, e.what());
  }
}

NumericalSemigroup require_semigroup(const clx_numset* t) {
  return NumericalSemigroup::from_set(t->value);
}

}  // namespace

extern "C" {

const char* clx_version(void) { return "0.1.0"; }

const char* clx_last_error(void) { return g_last_error.c_str(); }

void clx_string_free(char* s) { delete[] s; }

void clx_i64_array_free(int64_t* a) { delete[] a; }

/* ---- numerical sets ---------------------------------------------------- */

clx_status clx_numset_parse(const char* text, clx_numset** out) {
  if (!text || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_numset{parse_set(text)};
    return CLX_OK;
  });
}

clx_status clx_numset_from_gaps(const int64_t* gaps, size_t n, clx_numset** out) {
  if ((!gaps && n) || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_numset{
        NumericalSet::from_gaps(std::vector<std::int64_t>(gaps, gaps + n))};
    return CLX_OK;
  });
}

clx_status clx_numset_from_generators(const int64_t* gens, size_t n,
                                      clx_numset** out) {
  if (!gens || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_numset{
        NumericalSemigroup::from_generators({gens, gens + n}).set()};
    return CLX_OK;
  });
}

void clx_numset_free(clx_numset* t) { delete t; }

clx_status clx_numset_format(const clx_numset* t, char** out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup_string(format_set(t->value));
    return CLX_OK;
  });
}

clx_status clx_numset_to_json(const clx_numset* t, char** out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup_string(set_json(t->value).dump());
    return CLX_OK;
  });
}

int64_t clx_numset_frobenius(const clx_numset* t) {
  return t ? t->value.frobenius() : -1;
}

int64_t clx_numset_genus(const clx_numset* t) {
  return t ? t->value.genus() : 0;
}

clx_status clx_numset_contains(const clx_numset* t, int64_t n, int* out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = t->value.contains(n) ? 1 : 0;
    return CLX_OK;
  });
}

clx_status clx_numset_gaps(const clx_numset* t, int64_t** out, size_t* len) {
  if (!t || !out || !len) return fail(CLX_ERR_NULL, "null argument");
  *out = dup_array(t->value.gaps());
  *len = t->value.gaps().size();
  return CLX_OK;
}

clx_status clx_numset_is_semigroup(const clx_numset* t, int* out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  *out = t->value.closed_under_addition() ? 1 : 0;
  return CLX_OK;
}

clx_status clx_numset_is_symmetric(const clx_numset* t, int* out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  *out = t->value.is_symmetric() ? 1 : 0;
  return CLX_OK;
}

clx_status clx_numset_is_pseudosymmetric(const clx_numset* t, int* out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = require_semigroup(t).is_pseudosymmetric() ? 1 : 0;
    return CLX_OK;
  });
}

clx_status clx_numset_atom_monoid(const clx_numset* t, clx_numset** out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_numset{atom_monoid(t->value).set()};
    return CLX_OK;
  });
}

clx_status clx_numset_dual(const clx_numset* t, clx_numset** out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_numset{t->value.dual()};
    return CLX_OK;
  });
}

clx_status clx_numset_missing_pairs(const clx_numset* t, int64_t** out,
                                    size_t* len) {
  if (!t || !out || !len) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    const auto m = require_semigroup(t).missing_pairs();
    *out = dup_array(m);
    *len = m.size();
    return CLX_OK;
  });
}

clx_status clx_numset_minimal_generators(const clx_numset* t, int64_t** out,
                                         size_t* len) {
  if (!t || !out || !len) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    const auto g = require_semigroup(t).minimal_generators();
    *out = dup_array(g);
    *len = g.size();
    return CLX_OK;
  });
}

/* ---- partitions --------------------------------------------------------- */

clx_status clx_partition_parse(const char* text, clx_partition** out) {
  if (!text || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_partition{parse_partition(text)};
    return CLX_OK;
  });
}

clx_status clx_partition_from_parts(const int64_t* parts, size_t n,
                                    clx_partition** out) {
  if ((!parts && n) || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_partition{
        Partition::from_parts(std::vector<std::int64_t>(parts, parts + n))};
    return CLX_OK;
  });
}

void clx_partition_free(clx_partition* p) { delete p; }

clx_status clx_partition_format(const clx_partition* p, char** out) {
  if (!p || !out) return fail(CLX_ERR_NULL, "null argument");
  *out = dup_string(format_partition(p->value));
  return CLX_OK;
}

clx_status clx_partition_to_json(const clx_partition* p, char** out) {
  if (!p || !out) return fail(CLX_ERR_NULL, "null argument");
  *out = dup_string(partition_json(p->value).dump());
  return CLX_OK;
}

clx_status clx_partition_size(const clx_partition* p, int64_t* out) {
  if (!p || !out) return fail(CLX_ERR_NULL, "null argument");
  *out = p->value.size();
  return CLX_OK;
}

clx_status clx_partition_conjugate(const clx_partition* p, clx_partition** out) {
  if (!p || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_partition{p->value.conjugate()};
    return CLX_OK;
  });
}

clx_status clx_partition_hook_grid(const clx_partition* p, char** out) {
  if (!p || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup_string(render_hook_grid(p->value));
    return CLX_OK;
  });
}

clx_status clx_partition_hook_set(const clx_partition* p, int64_t** out,
                                  size_t* len) {
  if (!p || !out || !len) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    const auto h = hooks(p->value);
    *out = dup_array(h.hook_set);
    *len = h.hook_set.size();
    return CLX_OK;
  });
}

clx_status clx_partition_hook_multiset(const clx_partition* p, int64_t** out,
                                       size_t* len) {
  if (!p || !out || !len) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    const auto h = hooks(p->value);
    *out = dup_array(h.hook_multiset);
    *len = h.hook_multiset.size();
    return CLX_OK;
  });
}

clx_status clx_partition_is_core(const clx_partition* p, int64_t a, int* out) {
  if (!p || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = is_a_core(p->value, a) ? 1 : 0;
    return CLX_OK;
  });
}

clx_status clx_phi(const clx_numset* t, clx_partition** out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_partition{phi(t->value)};
    return CLX_OK;
  });
}

clx_status clx_phi_inverse(const clx_partition* p, clx_numset** out) {
  if (!p || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_numset{phi_inverse(p->value)};
    return CLX_OK;
  });
}

/* ---- Apery tuples ------------------------------------------------------- */

clx_status clx_apery_of(const clx_numset* t, int64_t a, clx_apery** out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_apery{apery_of(t->value, a)};
    return CLX_OK;
  });
}

clx_status clx_apery_parse(const char* text, clx_apery** out) {
  if (!text || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_apery{parse_tuple(text)};
    return CLX_OK;
  });
}

void clx_apery_free(clx_apery* t) { delete t; }

clx_status clx_apery_format(const clx_apery* t, char** out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  *out = dup_string(format_tuple(t->value));
  return CLX_OK;
}

clx_status clx_apery_to_json(const clx_apery* t, char** out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  *out = dup_string(tuple_json(t->value).dump());
  return CLX_OK;
}

clx_status clx_apery_set(const clx_apery* t, clx_numset** out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_numset{set_from_apery(t->value)};
    return CLX_OK;
  });
}

int64_t clx_apery_modulus(const clx_apery* t) { return t ? t->value.a : 0; }

clx_status clx_apery_coords(const clx_apery* t, int64_t** out, size_t* len) {
  if (!t || !out || !len) return fail(CLX_ERR_NULL, "null argument");
  *out = dup_array(t->value.x);
  *len = t->value.x.size();
  return CLX_OK;
}

clx_status clx_apery_genus(const clx_apery* t, int64_t* out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  *out = genus_of(t->value);
  return CLX_OK;
}

clx_status clx_apery_frobenius(const clx_apery* t, int64_t* out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = frobenius_of(t->value);
    return CLX_OK;
  });
}

clx_status clx_apery_partition_size(const clx_apery* t, int64_t* out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = size_of(t->value);
    return CLX_OK;
  });
}

clx_status clx_apery_conjugate(const clx_apery* t, clx_apery** out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new clx_apery{conjugate_apery(t->value)};
    return CLX_OK;
  });
}

clx_status clx_apery_is_semigroup(const clx_apery* t, int* out) {
  if (!t || !out) return fail(CLX_ERR_NULL, "null argument");
  *out = is_semigroup_tuple(t->value) ? 1 : 0;
  return CLX_OK;
}

clx_status clx_count_acores_by_max_hook(int64_t a, int64_t k, int64_t l,
                                        char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup_string(to_decimal(count_acores_by_max_hook(a, k, l)));
    return CLX_OK;
  });
}

clx_status clx_count_acores_max_hook_below(int64_t a, int64_t k, char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup_string(to_decimal(count_acores_max_hook_below(a, k)));
    return CLX_OK;
  });
}

clx_status clx_count_acores_by_parts(int64_t a, int64_t g, int at_most,
                                     char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup_string(to_decimal(count_acores_by_parts(a, g, at_most != 0)));
    return CLX_OK;
  });
}

/* ---- polytopes ----------------------------------------------------------- */

clx_status clx_core_stats_json(int64_t a, const int64_t* bs, size_t nbs,
                               int from_semigroups, int jobs, char** out) {
  if (!bs || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    const std::vector<std::int64_t> blist(bs, bs + nbs);
    SizeStats s;
    if (from_semigroups) {
      if (blist.size() != 1)
        throw std::invalid_argument(
            "from-semigroups stats need exactly one b (the oversemigroup "
            "polytope of <a,b>)");
      s = oversemigroup_stats(a, blist[0], jobs);
    } else {
      s = core_stats(a, blist, jobs);
    }
    *out = dup_string(stats_json(s).dump());
    return CLX_OK;
  });
}

clx_status clx_core_iter_new(int64_t a, const int64_t* bs, size_t nbs,
                             int from_semigroups, clx_core_iter** out) {
  if (!bs || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    const std::vector<std::int64_t> blist(bs, bs + nbs);
    InequalitySystem sys;
    std::vector<std::int64_t> bounds;
    if (from_semigroups) {
      if (blist.size() != 1)
        throw std::invalid_argument("from-semigroups needs exactly one b");
      sys = oversemigroup_polytope(a, blist[0]);
      bounds = apery_of_pair(a, blist[0]);
    } else {
      sys = core_polytope(a, blist);
      bounds = coordinate_bounds(a, blist);
    }
    auto it = std::make_unique<clx_core_iter>();
    it->a = a;
    enumerate_lattice_points(sys, bounds, [&](const std::vector<std::int64_t>& x) {
      it->points.push_back(x);
    });
    *out = it.release();
    return CLX_OK;
  });
}

clx_status clx_core_iter_next(clx_core_iter* it, clx_apery** out) {
  if (!it || !out) return fail(CLX_ERR_NULL, "null argument");
  if (it->next >= it->points.size()) return CLX_DONE;
  return guarded([&] {
    *out = new clx_apery{AperyTuple::make(it->a, it->points[it->next])};
    ++it->next;
    return CLX_OK;
  });
}

void clx_core_iter_free(clx_core_iter* it) { delete it; }

clx_status clx_count_oversemigroups(int64_t a, int64_t b, char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup_string(to_decimal(count_oversemigroups(a, b)));
    return CLX_OK;
  });
}

clx_status clx_oversemigroups_by_genus_json(int64_t a, int64_t b, char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    const auto strata = count_oversemigroups_by_genus(a, b);
    nlohmann::json obj = nlohmann::json::object();
    BigInt total = 0;
    for (const auto& [n, c] : strata) {
      obj[std::to_string(n)] = bigint_json(c);
      total += c;
    }
    const nlohmann::json j = {
        {"a", a}, {"b", b}, {"strata", obj}, {"total", bigint_json(total)}};
    *out = dup_string(j.dump());
    return CLX_OK;
  });
}

clx_status clx_ratio_table_json(int64_t a, int64_t b_limit, char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : semigroup_core_ratio(a, b_limit)) {
      rows.push_back({{"b", row.b},
                      {"oversemigroups", bigint_json(row.oversemigroups)},
                      {"cores", bigint_json(row.cores)},
                      {"ratio", rational_json(row.ratio)},
                      {"approx", static_cast<double>(row.ratio)}});
    }
    const nlohmann::json j = {{"a", a}, {"rows", rows}};
    *out = dup_string(j.dump());
    return CLX_OK;
  });
}

/* ---- anti-atom ------------------------------------------------------------ */

clx_status clx_anti_atom_json(const clx_numset* s, int include_witnesses,
                              char** out) {
  if (!s || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    const auto rep = anti_atom(require_semigroup(s));
    *out = dup_string(antiatom_json(rep, include_witnesses != 0).dump());
    return CLX_OK;
  });
}

clx_status clx_gamma_json(int64_t n_max, char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t n = 1; n <= n_max; ++n) {
      rows.push_back(gamma_json(corelattice::gamma(n)));
    }
    const nlohmann::json j = {{"rows", rows}};
    *out = dup_string(j.dump());
    return CLX_OK;
  });
}

clx_status clx_count_semigroups_by_frobenius(int64_t n, char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup_string(to_decimal(count_semigroups_by_frobenius(n)));
    return CLX_OK;
  });
}

/* ---- semigroup tree -------------------------------------------------------- */

clx_status clx_tree_iter_new(int64_t max_genus, int annotate,
                             clx_tree_iter** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    auto it = std::make_unique<clx_tree_iter>();
    it->nodes = build_tree(max_genus, annotate != 0);
    *out = it.release();
    return CLX_OK;
  });
}

clx_status clx_tree_iter_next(clx_tree_iter* it, char** out) {
  if (!it || !out) return fail(CLX_ERR_NULL, "null argument");
  if (it->next >= it->nodes.size()) return CLX_DONE;
  return guarded([&] {
    *out = dup_string(tree_node_json(it->nodes, it->next).dump());
    ++it->next;
    return CLX_OK;
  });
}

void clx_tree_iter_free(clx_tree_iter* it) { delete it; }

clx_status clx_tree_census_json(int64_t max_genus, char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    const nlohmann::json j = {{"max_genus", max_genus},
                              {"census", genus_census(max_genus)}};
    *out = dup_string(j.dump());
    return CLX_OK;
  });
}

clx_status clx_tree_dot(int64_t max_genus, int annotate, char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup_string(tree_dot(build_tree(max_genus, annotate != 0)));
    return CLX_OK;
  });
}

/* ---- verification ----------------------------------------------------------- */

clx_status clx_verify_suites(char** out) {
  if (!out) return fail(CLX_ERR_NULL, "null argument");
  const nlohmann::json j = verify::suite_names();
  *out = dup_string(j.dump());
  return CLX_OK;
}

clx_status clx_verify(const char* suite, char** out) {
  if (!suite || !out) return fail(CLX_ERR_NULL, "null argument");
  return guarded([&]() -> clx_status {
    bool all_pass = true;
    nlohmann::json j;
    if (std::string(suite) == "all") {
      j = nlohmann::json::array();
      for (const auto& rep : verify::run_all()) {
        all_pass = all_pass && rep.passed();
        j.push_back(verify::report_json(rep));
      }
    } else {
      const auto rep = verify::run_suite(suite);
      all_pass = rep.passed();
      j = verify::report_json(rep);
    }
    *out = dup_string(j.dump());
    if (!all_pass) {
      g_last_error = "one or more verification checks failed";
      return CLX_ERR_VERIFY;
    }
    return CLX_OK;
  });
}

} /* extern "C" */
