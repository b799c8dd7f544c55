#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "parw/codes.hpp"
#include "parw/cylinder.hpp"
#include "parw/dnrsim.hpp"
#include "parw/estimator.hpp"
#include "parw/levin.hpp"
#include "parw/testfam.hpp"
#include "parw/transforms.hpp"
#include "parw/weightfn.hpp"

// Plain-text file formats. Everywhere: UTF-8 lines, `#` starts a comment,
// blank lines are skipped, `e` denotes the empty string, rationals render as
// num/den in lowest terms. Output ordering is canonical (lexicographic,
// prefixes first) so repeated runs are byte-identical.
namespace parw::io {

// One member string per line.
CylinderSet parse_cylinder_set(std::istream& in);
void write_cylinder_set(std::ostream& out, const CylinderSet& a);

// Ordered variant used for cover streams: order kept, duplicates allowed.
std::vector<BitString> parse_bitstring_list(std::istream& in);

// Header `mode: integer-exponent | rational-table | length-scaled s=<q>`;
// table entries `<bits> e<k>` or `<bits> <num>/<den>`.
WeightFunction parse_weight_function(std::istream& in);
void write_weight_function(std::ostream& out, const WeightFunction& w);

// Sections `[tree <i>]` with member lines, indices 1..k in order.
TreeFamily parse_tree_family(std::istream& in);

// Sections `[test i=<n>]` with member lines.
TestFamily parse_test_family(std::istream& in);

// Lines `<label> <length>`.
std::vector<CodeRequest> parse_requests(std::istream& in);

// Lines `<bits> <nat>`; the domain length is the longest entry.
ComplexityEstimator parse_estimator_table(std::istream& in);

// Rational table `<bits> <num>/<den>` (f-values for normalization).
std::map<BitString, Rational> parse_rational_values(std::istream& in);

// Lines `<n> <h(n)>`.
std::map<long, long> parse_h_table(std::istream& in);

// Optional headers `dy <n>` / `dx <n>`, then lines `<Ybits> -> <Xbits>`.
// Depths default to the longest input/output seen.
MonotoneFunctionalTable parse_functional(std::istream& in);

// Lines `<bits> <num>/<den>` or `<bits> e<k>`, total to the given depth.
CapAssignment parse_caps(std::istream& in, int depth_x);

// Headers `dx <n>` and `dy <n>`, then `<sigma> <cylinder>` lines in
// timestamp order (the line order is the enumeration order).
FiniteLevinSystem parse_levin_system(std::istream& in);
void write_levin_system(std::ostream& out, const FiniteLevinSystem& v);

// Leaf strings, all of one length.
FinitePiClass parse_pi_class(std::istream& in);

// Lines `<n> <leaf> <value|undef>`; index count defaults to max n + 1 and
// may be overridden upward by the caller.
OracleTable parse_oracle_table(std::istream& in, int num_indices = -1);

// Filesystem wrappers; error messages carry the path.
CylinderSet load_cylinder_set(const std::string& path);
std::vector<BitString> load_bitstring_list(const std::string& path);
WeightFunction load_weight_function(const std::string& path);
TreeFamily load_tree_family(const std::string& path);
TestFamily load_test_family(const std::string& path);
std::vector<CodeRequest> load_requests(const std::string& path);
ComplexityEstimator load_estimator_table(const std::string& path);
std::map<BitString, Rational> load_rational_values(const std::string& path);
std::map<long, long> load_h_table(const std::string& path);
MonotoneFunctionalTable load_functional(const std::string& path);
CapAssignment load_caps(const std::string& path, int depth_x);
FiniteLevinSystem load_levin_system(const std::string& path);
FinitePiClass load_pi_class(const std::string& path);
OracleTable load_oracle_table(const std::string& path, int num_indices = -1);

}  // namespace parw::io
