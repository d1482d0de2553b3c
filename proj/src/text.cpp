#include "corelattice/text.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace corelattice {

namespace {

constexpr std::string_view kArrow = "→";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view tok, const char* what) {
  tok = trim(tok);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::string format_set(const NumericalSet& t) {
  std::ostringstream out;
  const std::int64_t f = t.frobenius();
  for (std::int64_t n = 0; n <= f + 1; ++n) {
    if (t.contains(n)) out << n << ",";
  }
  out << kArrow;
  return out.str();
}

NumericalSet parse_set(std::string_view text) {
  auto tokens = split(trim(text), ',');
  if (tokens.size() < 2)
    throw std::invalid_argument("numerical set must list elements then an arrow");
  const std::string_view tail = trim(tokens.back());
  if (tail != kArrow && tail != "->")
    throw std::invalid_argument(
        "numerical set must end with → (or the ASCII fallback ->)");
  tokens.pop_back();
  std::vector<std::int64_t> members;
  for (auto tok : tokens) members.push_back(parse_int(tok, "set element"));
  if (members.empty() || members.front() != 0)
    throw std::invalid_argument("a numerical set must start with 0");
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i] <= members[i - 1])
      throw std::invalid_argument("set elements must be strictly increasing");
  }
  // The set is the listed elements plus everything after the last one.
  std::vector<std::int64_t> gaps;
  std::size_t mi = 0;
  for (std::int64_t n = 0; n <= members.back(); ++n) {
    if (mi < members.size() && members[mi] == n) {
      ++mi;
    } else {
      gaps.push_back(n);
    }
  }
  return NumericalSet::from_gaps(std::move(gaps));
}

std::string format_partition(const Partition& p) {
  std::ostringstream out;
  out << "(";
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ",";
    out << parts[i];
  }
  out << ")";
  return out.str();
}

Partition parse_partition(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("partition must be parenthesized, e.g. (4,2,2)");
  s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) return Partition();
  std::vector<std::int64_t> parts;
  for (auto tok : split(s, ',')) parts.push_back(parse_int(tok, "part"));
  return Partition::from_parts(std::move(parts));
}

std::string format_tuple(const AperyTuple& t) {
  std::ostringstream out;
  out << "a=" << t.a << ";[";
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    if (i) out << ",";
    out << t.x[i];
  }
  out << "]";
  return out.str();
}

AperyTuple parse_tuple(std::string_view text) {
  std::string_view s = trim(text);
  if (s.substr(0, 2) != "a=")
    throw std::invalid_argument("tuple must look like a=4;[0,2,1]");
  const std::size_t semi = s.find(';');
  if (semi == std::string_view::npos)
    throw std::invalid_argument("tuple must look like a=4;[0,2,1]");
  const std::int64_t a = parse_int(s.substr(2, semi - 2), "modulus");
  std::string_view rest = trim(s.substr(semi + 1));
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    throw std::invalid_argument("tuple coordinates must be bracketed");
  rest = trim(rest.substr(1, rest.size() - 2));
  std::vector<std::int64_t> x;
  if (!rest.empty()) {
    for (auto tok : split(rest, ',')) x.push_back(parse_int(tok, "coordinate"));
  }
  return AperyTuple::make(a, std::move(x));
}

std::string render_hook_grid(const Partition& p) {
  if (p.empty()) return "(empty partition)\n";
  const HookData h = hooks(p);
  std::size_t width = 1;
  for (std::int64_t v : h.hook_multiset)
    width = std::max(width, std::to_string(v).size());
  std::ostringstream out;
  const auto border = [&](std::size_t cells) {
    out << "+";
    for (std::size_t j = 0; j < cells; ++j) out << std::string(width + 2, '-') << "+";
    out << "\n";
  };
  for (std::size_t i = 0; i < h.per_cell.size(); ++i) {
    // the border above row i also closes the bottom of the longer row above
    border(i == 0 ? h.per_cell[0].size() : h.per_cell[i - 1].size());
    out << "|";
    for (std::int64_t v : h.per_cell[i]) {
      std::string cell = std::to_string(v);
      out << " " << std::string(width - cell.size(), ' ') << cell << " |";
    }
    out << "\n";
  }
  border(h.per_cell.back().size());
  return out.str();
}

nlohmann::json bigint_json(const BigInt& v) {
  static const BigInt kSafe = BigInt(1) << 53;
  if (v <= kSafe && v >= -kSafe) {
    return nlohmann::json(static_cast<std::int64_t>(v));
  }
  return nlohmann::json(v.str());
}

nlohmann::json rational_json(const BigRational& v) {
  return {{"num", bigint_json(numerator(v))}, {"den", bigint_json(denominator(v))}};
}

nlohmann::json set_json(const NumericalSet& t) {
  return {{"gaps", t.gaps()}};
}

nlohmann::json partition_json(const Partition& p) {
  return {{"parts", p.parts()}};
}

nlohmann::json tuple_json(const AperyTuple& t) {
  return {{"a", t.a}, {"x", t.x}};
}

nlohmann::json stats_json(const SizeStats& s) {
  return {{"count", bigint_json(s.count)},
          {"max", bigint_json(BigInt(s.max_size))},
          {"argmax", s.argmax.x},
          {"mean", rational_json(s.mean())},
          {"sum", bigint_json(s.sum_size)},
          {"sum_sq", bigint_json(s.sum_sq)}};
}

nlohmann::json antiatom_json(const AntiAtomReport& rep, bool include_witnesses) {
  nlohmann::json j = {{"semigroup", format_set(rep.semigroup.set())},
                      {"P", rep.p_value},
                      {"M", rep.m_size}};
  if (include_witnesses) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& t : rep.witnesses) w.push_back(format_set(t));
    j["witnesses"] = std::move(w);
  }
  return j;
}

nlohmann::json tree_node_json(const std::vector<TreeNode>& nodes, std::size_t i) {
  const TreeNode& n = nodes[i];
  nlohmann::json j = {{"gens", n.generators}, {"genus", n.genus}};
  if (n.m_size) j["M"] = *n.m_size;
  if (n.p_value) j["P"] = *n.p_value;
  if (n.parent >= 0) {
    j["parent"] = nodes[static_cast<std::size_t>(n.parent)].generators;
  } else {
    j["parent"] = nullptr;
  }
  return j;
}

nlohmann::json gamma_json(const GammaValue& g) {
  return {{"N", g.n},
          {"p", bigint_json(g.p)},
          {"denominator", bigint_json(g.denominator)},
          {"gamma", rational_json(g.value)},
          {"approx", static_cast<double>(g.value)}};
}

}  // namespace corelattice
