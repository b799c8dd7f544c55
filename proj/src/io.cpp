#include "parw/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace parw::io {

namespace {

// Content lines with comments stripped, paired with 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    out.emplace_back(no, line.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

BitString parse_bits_or_fail(int line, const std::string& tok) {
  auto b = BitString::parse(tok);
  if (!b) fail(line, "expected a 0/1 string or `e`, got `" + tok + "`");
  return *b;
}

Rational parse_rational_or_fail(int line, const std::string& tok) {
  auto r = Rational::parse(tok);
  if (!r) fail(line, "expected a rational, got `" + tok + "`");
  return *r;
}

long parse_long_or_fail(int line, const std::string& tok) {
  try {
    size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) fail(line, "trailing characters in `" + tok + "`");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "expected an integer, got `" + tok + "`");
  }
}

// `e<k>` -> 2^-k; otherwise a plain rational.
Rational parse_weight_value(int line, const std::string& tok) {
  if (tok.size() > 1 && tok[0] == 'e' &&
      (std::isdigit(tok[1]) || tok[1] == '-')) {
    long k = parse_long_or_fail(line, tok.substr(1));
    return Rational::pow2(-k);
  }
  return parse_rational_or_fail(line, tok);
}

}  // namespace

CylinderSet parse_cylinder_set(std::istream& in) {
  std::vector<BitString> members;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() != 1) fail(no, "expected one string per line");
    members.push_back(parse_bits_or_fail(no, toks[0]));
  }
  return CylinderSet(std::move(members));
}

void write_cylinder_set(std::ostream& out, const CylinderSet& a) {
  for (const auto& m : a.members()) out << m.str() << "\n";
}

std::vector<BitString> parse_bitstring_list(std::istream& in) {
  std::vector<BitString> items;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() != 1) fail(no, "expected one string per line");
    items.push_back(parse_bits_or_fail(no, toks[0]));
  }
  return items;
}

WeightFunction parse_weight_function(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("weight file is empty");
  const auto& [hno, header] = lines.front();
  if (header.rfind("mode:", 0) != 0) fail(hno, "expected `mode:` header");
  std::string mode = header.substr(5);
  size_t b = mode.find_first_not_of(" \t");
  mode = b == std::string::npos ? "" : mode.substr(b);

  if (mode.rfind("length-scaled", 0) == 0) {
    auto eq = mode.find("s=");
    if (eq == std::string::npos) fail(hno, "length-scaled needs s=<rational>");
    Rational s = parse_rational_or_fail(hno, mode.substr(eq + 2));
    if (lines.size() > 1)
      fail(lines[1].first, "length-scaled mode takes no table entries");
    return WeightFunction::length_scaled(s);
  }

  bool exponent_mode = mode == "integer-exponent";
  if (!exponent_mode && mode != "rational-table")
    fail(hno, "unknown weight mode `" + mode + "`");

  std::map<BitString, Rational> table;
  int depth = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    auto toks = split_ws(line);
    if (toks.size() != 2) fail(no, "expected `<bits> <value>`");
    BitString sigma = parse_bits_or_fail(no, toks[0]);
    Rational v = parse_weight_value(no, toks[1]);
    if (!table.emplace(sigma, v).second)
      fail(no, "duplicate entry for " + sigma.str());
    depth = std::max(depth, sigma.length());
  }
  if (exponent_mode) {
    std::map<BitString, long> exps;
    for (const auto& [sigma, v] : table) {
      // Value must be an exact power of two.
      const mpq_class& q = v.raw();
      long k;
      if (q.get_num() == 1 && mpz_popcount(q.get_den().get_mpz_t()) == 1) {
        k = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2)) - 1;
      } else if (q.get_den() == 1 &&
                 mpz_popcount(q.get_num().get_mpz_t()) == 1) {
        k = 1 - static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
      } else {
        throw ParseError("integer-exponent entry at " + sigma.str() +
                         " is not a power of two");
      }
      exps.emplace(sigma, k);
    }
    return WeightFunction::integer_exponents(std::move(exps), depth);
  }
  return WeightFunction::rational_table(std::move(table), depth);
}

void write_weight_function(std::ostream& out, const WeightFunction& w) {
  switch (w.mode()) {
    case WeightFunction::Mode::LengthScaled:
      out << "mode: length-scaled s=" << w.scale().str() << "\n";
      return;
    case WeightFunction::Mode::IntegerExponent:
      out << "mode: integer-exponent\n";
      for (const auto& [sigma, k] : w.exponent_table())
        out << sigma.str() << " e" << k << "\n";
      return;
    case WeightFunction::Mode::RationalTable:
      out << "mode: rational-table\n";
      for (const auto& [sigma, v] : w.table())
        out << sigma.str() << " " << v.str() << "\n";
      return;
  }
}

namespace {

// Shared section-file reader for `[tree i]` and `[test i=n]` styles.
std::vector<std::pair<long, std::vector<BitString>>> parse_sections(
    std::istream& in, const std::string& kind, bool with_eq) {
  std::vector<std::pair<long, std::vector<BitString>>> sections;
  for (const auto& [no, line] : content_lines(in)) {
    if (line.front() == '[') {
      if (line.back() != ']') fail(no, "unterminated section header");
      std::string inner = line.substr(1, line.size() - 2);
      auto toks = split_ws(inner);
      std::string want = with_eq ? kind + " i=<n>" : kind + " <n>";
      if (toks.size() != 2 || toks[0] != kind)
        fail(no, "expected `[" + want + "]`");
      std::string num = toks[1];
      if (with_eq) {
        if (num.rfind("i=", 0) != 0) fail(no, "expected `[" + want + "]`");
        num = num.substr(2);
      }
      sections.emplace_back(parse_long_or_fail(no, num),
                            std::vector<BitString>{});
      continue;
    }
    if (sections.empty()) fail(no, "member line before any section header");
    auto toks = split_ws(line);
    if (toks.size() != 1) fail(no, "expected one string per line");
    sections.back().second.push_back(parse_bits_or_fail(no, toks[0]));
  }
  return sections;
}

}  // namespace

TreeFamily parse_tree_family(std::istream& in) {
  auto sections = parse_sections(in, "tree", /*with_eq=*/false);
  std::vector<CylinderSet> trees;
  for (size_t i = 0; i < sections.size(); ++i) {
    if (sections[i].first != static_cast<long>(i + 1))
      throw ParseError("tree sections must be numbered 1..k in order");
    trees.emplace_back(std::move(sections[i].second));
  }
  return TreeFamily(std::move(trees));
}

TestFamily parse_test_family(std::istream& in) {
  auto sections = parse_sections(in, "test", /*with_eq=*/true);
  std::map<long, CylinderSet> sets;
  for (auto& [i, members] : sections) {
    if (!sets.emplace(i, CylinderSet(std::move(members))).second)
      throw ParseError("duplicate test index " + std::to_string(i));
  }
  return TestFamily(std::move(sets));
}

std::vector<CodeRequest> parse_requests(std::istream& in) {
  std::vector<CodeRequest> reqs;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() != 2) fail(no, "expected `<label> <length>`");
    long len = parse_long_or_fail(no, toks[1]);
    if (len < 0) fail(no, "request length must be >= 0");
    reqs.push_back({toks[0], len});
  }
  return reqs;
}

ComplexityEstimator parse_estimator_table(std::istream& in) {
  std::map<BitString, long> vals;
  int depth = 0;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() != 2) fail(no, "expected `<bits> <nat>`");
    BitString tau = parse_bits_or_fail(no, toks[0]);
    long k = parse_long_or_fail(no, toks[1]);
    if (k < 0) fail(no, "estimator values must be >= 0");
    if (!vals.emplace(tau, k).second)
      fail(no, "duplicate entry for " + tau.str());
    depth = std::max(depth, tau.length());
  }
  return ComplexityEstimator::table(std::move(vals), depth);
}

std::map<BitString, Rational> parse_rational_values(std::istream& in) {
  std::map<BitString, Rational> vals;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() != 2) fail(no, "expected `<bits> <rational>`");
    BitString sigma = parse_bits_or_fail(no, toks[0]);
    if (!vals.emplace(sigma, parse_rational_or_fail(no, toks[1])).second)
      fail(no, "duplicate entry for " + sigma.str());
  }
  return vals;
}

std::map<long, long> parse_h_table(std::istream& in) {
  std::map<long, long> h;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() != 2) fail(no, "expected `<n> <h(n)>`");
    long n = parse_long_or_fail(no, toks[0]);
    if (!h.emplace(n, parse_long_or_fail(no, toks[1])).second)
      fail(no, "duplicate entry for " + std::to_string(n));
  }
  return h;
}

MonotoneFunctionalTable parse_functional(std::istream& in) {
  std::map<BitString, BitString> entries;
  int dy = -1, dx = -1, max_in = 0, max_out = 0;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() == 2 && (toks[0] == "dy" || toks[0] == "dx")) {
      (toks[0] == "dy" ? dy : dx) =
          static_cast<int>(parse_long_or_fail(no, toks[1]));
      continue;
    }
    if (toks.size() != 3 || toks[1] != "->")
      fail(no, "expected `<Ybits> -> <Xbits>`");
    BitString y = parse_bits_or_fail(no, toks[0]);
    BitString x = parse_bits_or_fail(no, toks[2]);
    if (!entries.emplace(y, x).second)
      fail(no, "duplicate entry for " + y.str());
    max_in = std::max(max_in, y.length());
    max_out = std::max(max_out, x.length());
  }
  return MonotoneFunctionalTable(std::move(entries), dy < 0 ? max_in : dy,
                                 dx < 0 ? max_out : dx);
}

CapAssignment parse_caps(std::istream& in, int depth_x) {
  std::map<BitString, Rational> caps;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() != 2) fail(no, "expected `<bits> <value>`");
    BitString sigma = parse_bits_or_fail(no, toks[0]);
    if (!caps.emplace(sigma, parse_weight_value(no, toks[1])).second)
      fail(no, "duplicate entry for " + sigma.str());
  }
  return CapAssignment(std::move(caps), depth_x);
}

FiniteLevinSystem parse_levin_system(std::istream& in) {
  int dx = -1, dy = -1;
  std::vector<std::pair<BitString, BitString>> rows;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() == 2 && (toks[0] == "dx" || toks[0] == "dy")) {
      (toks[0] == "dx" ? dx : dy) =
          static_cast<int>(parse_long_or_fail(no, toks[1]));
      continue;
    }
    if (toks.size() != 2) fail(no, "expected `<sigma> <cylinder>`");
    rows.emplace_back(parse_bits_or_fail(no, toks[0]),
                      parse_bits_or_fail(no, toks[1]));
  }
  int max_idx = 0, max_cyl = 0;
  for (const auto& [s, c] : rows) {
    max_idx = std::max(max_idx, s.length());
    max_cyl = std::max(max_cyl, c.length());
  }
  FiniteLevinSystem sys(dx < 0 ? max_idx : dx, dy < 0 ? max_cyl : dy);
  std::uint64_t stamp = 0;
  for (const auto& [s, c] : rows) sys.add_entry(s, c, stamp++);
  return sys;
}

void write_levin_system(std::ostream& out, const FiniteLevinSystem& v) {
  out << "dx " << v.depth_x() << "\n";
  out << "dy " << v.depth_y() << "\n";
  struct Row {
    std::uint64_t stamp;
    BitString sigma, cyl;
  };
  std::vector<Row> rows;
  for (const auto& [sigma, list] : v.all_entries())
    for (const auto& e : list) rows.push_back({e.stamp, sigma, e.cylinder});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.stamp != b.stamp) return a.stamp < b.stamp;
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    return a.cyl < b.cyl;
  });
  for (const auto& r : rows) out << r.sigma.str() << " " << r.cyl.str() << "\n";
}

FinitePiClass parse_pi_class(std::istream& in) {
  std::vector<BitString> leaves;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() != 1) fail(no, "expected one leaf per line");
    leaves.push_back(parse_bits_or_fail(no, toks[0]));
  }
  if (leaves.empty()) throw ParseError("pi class file has no leaves");
  return FinitePiClass(leaves.front().length(), std::move(leaves));
}

OracleTable parse_oracle_table(std::istream& in, int num_indices) {
  std::map<std::pair<int, BitString>, long> vals;
  int max_n = -1;
  for (const auto& [no, line] : content_lines(in)) {
    auto toks = split_ws(line);
    if (toks.size() != 3) fail(no, "expected `<n> <leaf> <value|undef>`");
    int n = static_cast<int>(parse_long_or_fail(no, toks[0]));
    BitString leaf = parse_bits_or_fail(no, toks[1]);
    max_n = std::max(max_n, n);
    if (toks[2] == "undef") continue;  // divergent pairs may be listed
    long v = parse_long_or_fail(no, toks[2]);
    if (!vals.emplace(std::make_pair(n, leaf), v).second)
      fail(no, "duplicate entry for index " + std::to_string(n) + " at " +
                   leaf.str());
  }
  return OracleTable(num_indices < 0 ? max_n + 1 : num_indices,
                     std::move(vals));
}

namespace {

template <typename F>
auto from_file(const std::string& path, F f)
    -> decltype(f(std::declval<std::ifstream&>())) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return f(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

CylinderSet load_cylinder_set(const std::string& path) {
  return from_file(path, [](std::istream& in) { return parse_cylinder_set(in); });
}
std::vector<BitString> load_bitstring_list(const std::string& path) {
  return from_file(path,
                   [](std::istream& in) { return parse_bitstring_list(in); });
}
WeightFunction load_weight_function(const std::string& path) {
  return from_file(path,
                   [](std::istream& in) { return parse_weight_function(in); });
}
TreeFamily load_tree_family(const std::string& path) {
  return from_file(path,
                   [](std::istream& in) { return parse_tree_family(in); });
}
TestFamily load_test_family(const std::string& path) {
  return from_file(path,
                   [](std::istream& in) { return parse_test_family(in); });
}
std::vector<CodeRequest> load_requests(const std::string& path) {
  return from_file(path, [](std::istream& in) { return parse_requests(in); });
}
ComplexityEstimator load_estimator_table(const std::string& path) {
  return from_file(path,
                   [](std::istream& in) { return parse_estimator_table(in); });
}
std::map<BitString, Rational> load_rational_values(const std::string& path) {
  return from_file(path,
                   [](std::istream& in) { return parse_rational_values(in); });
}
std::map<long, long> load_h_table(const std::string& path) {
  return from_file(path, [](std::istream& in) { return parse_h_table(in); });
}
MonotoneFunctionalTable load_functional(const std::string& path) {
  return from_file(path,
                   [](std::istream& in) { return parse_functional(in); });
}
CapAssignment load_caps(const std::string& path, int depth_x) {
  return from_file(path, [depth_x](std::istream& in) {
    return parse_caps(in, depth_x);
  });
}
FiniteLevinSystem load_levin_system(const std::string& path) {
  return from_file(path,
                   [](std::istream& in) { return parse_levin_system(in); });
}
FinitePiClass load_pi_class(const std::string& path) {
  return from_file(path, [](std::istream& in) { return parse_pi_class(in); });
}
OracleTable load_oracle_table(const std::string& path, int num_indices) {
  return from_file(path, [num_indices](std::istream& in) {
    return parse_oracle_table(in, num_indices);
  });
}

}  // namespace parw::io
