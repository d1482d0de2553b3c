// corelattice command-line interface. All computation goes through the
// shared-library C API; this file only parses arguments and formats output.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corelattice/corelattice.h"

namespace {

using nlohmann::json;

// Owns a string returned by the C API.
struct CStr {
  char* p = nullptr;
  ~CStr() { clx_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct NumsetHandle {
  clx_numset* p = nullptr;
  ~NumsetHandle() { clx_numset_free(p); }
};

struct PartitionHandle {
  clx_partition* p = nullptr;
  ~PartitionHandle() { clx_partition_free(p); }
};

struct AperyHandle {
  clx_apery* p = nullptr;
  ~AperyHandle() { clx_apery_free(p); }
};

int report_error(clx_status st) {
  std::cerr << "error: " << clx_last_error() << "\n";
  // exit 1: usage/precondition problems; exit 2: failed assertions
  return (st == CLX_ERR_VERIFY || st == CLX_ERR_INTERNAL) ? 2 : 1;
}

std::string json_number_str(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string rational_str(const json& j) {
  const std::string num = json_number_str(j.at("num"));
  const std::string den = json_number_str(j.at("den"));
  return den == "1" ? num : num + "/" + den;
}

std::string format_choice;  // json | text | csv
int jobs = 1;

bool text_mode() { return format_choice == "text"; }
bool csv_mode() { return format_choice == "csv"; }

int run_cores(std::int64_t a, const std::vector<std::int64_t>& bs, bool stats,
              bool dump, bool from_semigroups) {
  if (!stats && !dump) stats = true;
  if (stats) {
    CStr out;
    const clx_status st = clx_core_stats_json(a, bs.data(), bs.size(),
                                              from_semigroups, jobs, &out.p);
    if (st != CLX_OK) return report_error(st);
    const json j = json::parse(out.str());
    if (text_mode()) {
      std::cout << "count=" << json_number_str(j.at("count"))
                << " max=" << json_number_str(j.at("max"))
                << " mean=" << rational_str(j.at("mean")) << " argmax=[";
      const auto& am = j.at("argmax");
      for (std::size_t i = 0; i < am.size(); ++i) {
        std::cout << (i ? "," : "") << am[i].get<std::int64_t>();
      }
      std::cout << "]\n";
    } else if (csv_mode()) {
      std::cout << "count,max,mean_num,mean_den,argmax\n"
                << json_number_str(j.at("count")) << ","
                << json_number_str(j.at("max")) << ","
                << json_number_str(j.at("mean").at("num")) << ","
                << json_number_str(j.at("mean").at("den")) << ",";
      const auto& am = j.at("argmax");
      for (std::size_t i = 0; i < am.size(); ++i) {
        std::cout << (i ? " " : "") << am[i].get<std::int64_t>();
      }
      std::cout << "\n";
    } else {
      std::cout << out.str() << "\n";
    }
  }
  if (dump) {
    clx_core_iter* it = nullptr;
    const clx_status st =
        clx_core_iter_new(a, bs.data(), bs.size(), from_semigroups, &it);
    if (st != CLX_OK) return report_error(st);
    for (std::int64_t i = 1; i < a; ++i) std::cout << (i > 1 ? "," : "") << "x" << i;
    std::cout << "\n";
    for (;;) {
      clx_apery* pt = nullptr;
      const clx_status s2 = clx_core_iter_next(it, &pt);
      if (s2 == CLX_DONE) break;
      if (s2 != CLX_OK) {
        clx_core_iter_free(it);
        return report_error(s2);
      }
      int64_t* coords = nullptr;
      size_t len = 0;
      clx_apery_coords(pt, &coords, &len);
      for (size_t i = 0; i < len; ++i) std::cout << (i ? "," : "") << coords[i];
      std::cout << "\n";
      clx_i64_array_free(coords);
      clx_apery_free(pt);
    }
    clx_core_iter_free(it);
  }
  return 0;
}

int run_partition(const std::string& input, bool show_hooks, bool show_conjugate,
                  std::int64_t apery_a) {
  NumsetHandle set;
  PartitionHandle part;
  const bool from_partition = !input.empty() && input.find('(') != std::string::npos;
  clx_status st;
  if (from_partition) {
    st = clx_partition_parse(input.c_str(), &part.p);
    if (st == CLX_OK) st = clx_phi_inverse(part.p, &set.p);
  } else {
    st = clx_numset_parse(input.c_str(), &set.p);
    if (st == CLX_OK) st = clx_phi(set.p, &part.p);
  }
  if (st != CLX_OK) return report_error(st);

  CStr set_text, part_text;
  clx_numset_format(set.p, &set_text.p);
  clx_partition_format(part.p, &part_text.p);

  json j;
  j["set"] = set_text.str();
  {
    CStr gaps_json;
    clx_numset_to_json(set.p, &gaps_json.p);
    j["gaps"] = json::parse(gaps_json.str()).at("gaps");
  }
  {
    CStr pj;
    clx_partition_to_json(part.p, &pj.p);
    j["partition"] = json::parse(pj.str()).at("parts");
  }
  std::int64_t size = 0;
  clx_partition_size(part.p, &size);
  j["size"] = size;

  CStr grid;
  if (show_hooks) {
    st = clx_partition_hook_grid(part.p, &grid.p);
    if (st != CLX_OK) return report_error(st);
    int64_t* hs = nullptr;
    size_t len = 0;
    st = clx_partition_hook_set(part.p, &hs, &len);
    if (st != CLX_OK) return report_error(st);
    j["hook_set"] = std::vector<std::int64_t>(hs, hs + len);
    clx_i64_array_free(hs);
  }
  PartitionHandle conj;
  if (show_conjugate) {
    st = clx_partition_conjugate(part.p, &conj.p);
    if (st != CLX_OK) return report_error(st);
    CStr cj;
    clx_partition_to_json(conj.p, &cj.p);
    j["conjugate"] = json::parse(cj.str()).at("parts");
  }
  AperyHandle ap;
  if (apery_a > 0) {
    st = clx_apery_of(set.p, apery_a, &ap.p);
    if (st != CLX_OK) return report_error(st);
    CStr aj;
    clx_apery_to_json(ap.p, &aj.p);
    j["apery"] = json::parse(aj.str());
  }

  if (!text_mode()) {
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "set:       " << set_text.str() << "\n";
  std::cout << "partition: " << part_text.str() << " (size " << size << ")\n";
  if (show_conjugate) {
    CStr ct;
    clx_partition_format(conj.p, &ct.p);
    std::cout << "conjugate: " << ct.str() << "\n";
  }
  if (apery_a > 0) {
    CStr at;
    clx_apery_format(ap.p, &at.p);
    std::cout << "apery:     " << at.str() << "\n";
  }
  if (show_hooks) {
    std::cout << "hook set:  {";
    const auto& hs = j.at("hook_set");
    for (std::size_t i = 0; i < hs.size(); ++i) {
      std::cout << (i ? "," : "") << hs[i].get<std::int64_t>();
    }
    std::cout << "}\n" << grid.str();
  }
  return 0;
}

int run_antiatom(const std::vector<std::string>& args, bool witnesses) {
  NumsetHandle set;
  clx_status st;
  if (!args.empty() && args[0] == "gens") {
    std::vector<int64_t> gens;
    for (std::size_t i = 1; i < args.size(); ++i) {
      try {
        gens.push_back(std::stoll(args[i]));
      } catch (...) {
        std::cerr << "error: malformed generator '" << args[i] << "'\n";
        return 1;
      }
    }
    if (gens.empty()) {
      std::cerr << "error: 'gens' needs at least one generator\n";
      return 1;
    }
    st = clx_numset_from_generators(gens.data(), gens.size(), &set.p);
  } else if (args.size() == 1) {
    st = clx_numset_parse(args[0].c_str(), &set.p);
  } else {
    std::cerr << "error: pass one set literal or 'gens n1 n2 ...'\n";
    return 1;
  }
  if (st != CLX_OK) return report_error(st);

  CStr out;
  st = clx_anti_atom_json(set.p, witnesses ? 1 : 0, &out.p);
  if (st != CLX_OK) return report_error(st);
  if (!text_mode()) {
    std::cout << out.str() << "\n";
    return 0;
  }
  const json j = json::parse(out.str());
  std::cout << "S = " << j.at("semigroup").get<std::string>()
            << "  P(S) = " << j.at("P").get<std::int64_t>()
            << "  |M(S)| = " << j.at("M").get<std::int64_t>() << "\n";
  if (witnesses) {
    for (const auto& w : j.at("witnesses")) {
      std::cout << "  " << w.get<std::string>() << "\n";
    }
  }
  return 0;
}

int run_tree(std::int64_t max_genus, bool annotate, bool dot, bool census) {
  if (dot) {
    CStr out;
    const clx_status st = clx_tree_dot(max_genus, annotate ? 1 : 0, &out.p);
    if (st != CLX_OK) return report_error(st);
    std::cout << out.str();
    return 0;
  }
  if (census) {
    CStr out;
    const clx_status st = clx_tree_census_json(max_genus, &out.p);
    if (st != CLX_OK) return report_error(st);
    if (text_mode() || csv_mode()) {
      const json j = json::parse(out.str());
      const auto& c = j.at("census");
      if (csv_mode()) std::cout << "genus,count\n";
      for (std::size_t g = 0; g < c.size(); ++g) {
        if (csv_mode()) {
          std::cout << g << "," << c[g].get<std::int64_t>() << "\n";
        } else {
          std::cout << "genus " << g << ": " << c[g].get<std::int64_t>() << "\n";
        }
      }
    } else {
      std::cout << out.str() << "\n";
    }
    return 0;
  }
  clx_tree_iter* it = nullptr;
  const clx_status st = clx_tree_iter_new(max_genus, annotate ? 1 : 0, &it);
  if (st != CLX_OK) return report_error(st);
  for (;;) {
    CStr line;
    const clx_status s2 = clx_tree_iter_next(it, &line.p);
    if (s2 == CLX_DONE) break;
    if (s2 != CLX_OK) {
      clx_tree_iter_free(it);
      return report_error(s2);
    }
    if (text_mode()) {
      const json j = json::parse(line.str());
      std::cout << "genus " << j.at("genus").get<std::int64_t>() << " <";
      const auto& gens = j.at("gens");
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::cout << (i ? "," : "") << gens[i].get<std::int64_t>();
      }
      std::cout << ">";
      if (j.contains("M")) {
        std::cout << "  |M|=" << j.at("M").get<std::int64_t>()
                  << " P=" << j.at("P").get<std::int64_t>();
      }
      std::cout << "\n";
    } else {
      std::cout << line.str() << "\n";
    }
  }
  clx_tree_iter_free(it);
  return 0;
}

int run_gamma(std::int64_t n) {
  CStr out;
  const clx_status st = clx_gamma_json(n, &out.p);
  if (st != CLX_OK) return report_error(st);
  if (!text_mode() && !csv_mode()) {
    std::cout << out.str() << "\n";
    return 0;
  }
  const json j = json::parse(out.str());
  if (csv_mode()) {
    std::cout << "N,p,denominator,gamma_num,gamma_den,approx\n";
    for (const auto& row : j.at("rows")) {
      std::printf("%lld,%s,%s,%s,%s,%.9f\n",
                  static_cast<long long>(row.at("N").get<std::int64_t>()),
                  json_number_str(row.at("p")).c_str(),
                  json_number_str(row.at("denominator")).c_str(),
                  json_number_str(row.at("gamma").at("num")).c_str(),
                  json_number_str(row.at("gamma").at("den")).c_str(),
                  row.at("approx").get<double>());
    }
    return 0;
  }
  for (const auto& row : j.at("rows")) {
    std::printf("N=%-3lld P=%-10s gamma=%-12s ~%.6f\n",
                static_cast<long long>(row.at("N").get<std::int64_t>()),
                json_number_str(row.at("p")).c_str(),
                rational_str(row.at("gamma")).c_str(),
                row.at("approx").get<double>());
  }
  return 0;
}

int run_ratio(std::int64_t a, std::int64_t b_limit) {
  CStr out;
  const clx_status st = clx_ratio_table_json(a, b_limit, &out.p);
  if (st != CLX_OK) return report_error(st);
  if (!text_mode() && !csv_mode()) {
    std::cout << out.str() << "\n";
    return 0;
  }
  const json j = json::parse(out.str());
  if (csv_mode()) {
    std::cout << "b,oversemigroups,cores,ratio_num,ratio_den,approx\n";
    for (const auto& row : j.at("rows")) {
      std::printf("%lld,%s,%s,%s,%s,%.9f\n",
                  static_cast<long long>(row.at("b").get<std::int64_t>()),
                  json_number_str(row.at("oversemigroups")).c_str(),
                  json_number_str(row.at("cores")).c_str(),
                  json_number_str(row.at("ratio").at("num")).c_str(),
                  json_number_str(row.at("ratio").at("den")).c_str(),
                  row.at("approx").get<double>());
    }
    return 0;
  }
  for (const auto& row : j.at("rows")) {
    std::printf("b=%-4lld O=%-10s C=%-12s O/C=%-12s ~%.6f\n",
                static_cast<long long>(row.at("b").get<std::int64_t>()),
                json_number_str(row.at("oversemigroups")).c_str(),
                json_number_str(row.at("cores")).c_str(),
                rational_str(row.at("ratio")).c_str(),
                row.at("approx").get<double>());
  }
  return 0;
}

int run_verify(const std::string& suite, bool list) {
  if (list) {
    CStr names;
    clx_verify_suites(&names.p);
    for (const auto& n : json::parse(names.str())) {
      std::cout << n.get<std::string>() << "\n";
    }
    return 0;
  }
  CStr out;
  const clx_status st = clx_verify(suite.c_str(), &out.p);
  if (st != CLX_OK && st != CLX_ERR_VERIFY) return report_error(st);
  if (!text_mode()) {
    std::cout << out.str() << "\n";
  } else {
    const json j = json::parse(out.str());
    const json reports = j.is_array() ? j : json::array({j});
    for (const auto& rep : reports) {
      std::cout << "suite " << rep.at("suite").get<std::string>() << ": "
                << (rep.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
      for (const auto& c : rep.at("checks")) {
        std::cout << "  [" << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "] "
                  << c.at("name").get<std::string>();
        const std::string detail = c.at("detail").get<std::string>();
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
      }
    }
  }
  return st == CLX_OK ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration for numerical sets, core partitions, and "
               "lattice points of core polytopes"};
  app.set_version_flag("--version", clx_version());
  app.add_option("--format", format_choice, "output format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->default_val("json");
  app.add_option("--jobs", jobs, "parallel enumeration threads (default 1)")
      ->check(CLI::PositiveNumber)
      ->default_val(1);
  app.require_subcommand(1);

  auto* cores = app.add_subcommand(
      "cores", "enumerate simultaneous (a,b_1,...,b_m)-core partitions");
  std::int64_t core_a = 0;
  std::vector<std::int64_t> core_bs;
  bool core_stats = false, core_dump = false, core_from_sg = false;
  cores->add_option("a", core_a, "first modulus")->required();
  cores->add_option("b", core_bs, "further moduli")->required()->expected(-1);
  cores->add_flag("--stats", core_stats, "print exact size statistics (default)");
  cores->add_flag("--dump", core_dump, "dump the lattice points as CSV");
  cores->add_flag("--from-semigroups", core_from_sg,
                  "restrict to cores coming from numerical semigroups "
                  "(oversemigroups of <a,b>)");

  auto* partition = app.add_subcommand(
      "partition", "convert between numerical sets and partitions");
  std::string part_input;
  bool part_hooks = false, part_conj = false;
  std::int64_t part_apery = 0;
  partition->add_option("input", part_input,
                        "a set like \"0,1,4,5,7,->\" or a partition like \"(4,2,2)\"")
      ->required();
  partition->add_flag("--hooks", part_hooks, "show hook lengths");
  partition->add_flag("--conjugate", part_conj, "show the conjugate partition");
  partition->add_option("--apery", part_apery,
                        "show the Apery tuple for this modulus");

  auto* antiatom = app.add_subcommand(
      "antiatom", "count numerical sets with the given atom monoid");
  std::vector<std::string> anti_args;
  bool anti_wit = false;
  antiatom->add_option("input", anti_args, "a semigroup literal, or: gens n1 n2 ...")
      ->required()
      ->expected(-1);
  antiatom->add_flag("--witnesses", anti_wit, "list the witness sets");

  auto* tree = app.add_subcommand("tree", "generate the semigroup tree by genus");
  std::int64_t tree_genus = 0;
  bool tree_annot = false, tree_dot_flag = false, tree_census_flag = false;
  tree->add_option("max_genus", tree_genus, "deepest level to generate")->required();
  tree->add_flag("--annotate", tree_annot, "attach |M(S)| and P(S) to each node");
  tree->add_flag("--dot", tree_dot_flag, "emit Graphviz dot");
  tree->add_flag("--census", tree_census_flag, "emit only per-genus node counts");

  auto* gamma_cmd = app.add_subcommand(
      "gamma", "P(S_N)/2^(N-1) for the fully gapped semigroups S_N");
  std::int64_t gamma_n = 0;
  gamma_cmd->add_option("N", gamma_n, "table rows 1..N")->required();

  auto* ratio = app.add_subcommand(
      "ratio", "oversemigroup count over core count, O(<a,b>)/C(a,b)");
  std::int64_t ratio_a = 0, ratio_blimit = 0;
  ratio->add_option("a", ratio_a, "modulus (2, 3 or 4)")->required();
  ratio->add_option("b_limit", ratio_blimit, "largest b")->required();

  auto* verify = app.add_subcommand(
      "verify", "run a verification suite (exit 2 on any failed check)");
  std::string verify_suite = "all";
  bool verify_list = false;
  verify->add_option("suite", verify_suite, "suite name or 'all'");
  verify->add_flag("--list", verify_list, "list suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 1;
  }

  if (cores->parsed())
    return run_cores(core_a, core_bs, core_stats, core_dump, core_from_sg);
  if (partition->parsed())
    return run_partition(part_input, part_hooks, part_conj, part_apery);
  if (antiatom->parsed()) return run_antiatom(anti_args, anti_wit);
  if (tree->parsed())
    return run_tree(tree_genus, tree_annot, tree_dot_flag, tree_census_flag);
  if (gamma_cmd->parsed()) return run_gamma(gamma_n);
  if (ratio->parsed()) return run_ratio(ratio_a, ratio_blimit);
  if (verify->parsed()) return run_verify(verify_suite, verify_list);
  return 1;
}
