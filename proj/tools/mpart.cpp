// mpart: decide M-partitions of digraphs, enumerate minimal obstructions and
// check the obstruction families of the ten 2x2 patterns.
//
// Exit codes: 0 affirmative/pass, 1 negative/fail, 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "mpart/catalog.hpp"
#include "mpart/families.hpp"
#include "mpart/solver.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

int cmd_solve(const std::string& pattern_text, const std::string& digraph_text, bool witness, bool obstruction) {
  const mpart::Pattern m = mpart::parse_pattern(pattern_text);
  const mpart::Digraph d = mpart::parse_digraph(digraph_text);
  const auto p = mpart::solve(d, m);
  if (p) {
    std::cout << "YES\n";
    if (witness)
      for (std::size_t v = 0; v < d.order(); ++v) std::cout << v << ':' << (p->parts[v] + 1) << '\n';
    return kYes;
  }
  std::cout << "NO\n";
  if (obstruction) std::cout << mpart::render(mpart::find_embedded_minimal_obstruction(d, m).digraph) << '\n';
  return kNo;
}

int cmd_classify(const std::string& pattern_text) {
  const mpart::Pattern m = mpart::parse_pattern(pattern_text);
  const mpart::Classification c = mpart::classify_2x2(m);
  if (c.star_diagonal())
    std::cout << "STAR-DIAGONAL\n";
  else
    std::cout << 'M' << c.canonical_index << " via " << c.transform.describe() << '\n';
  return kYes;
}

int cmd_enumerate(const std::string& pattern_text, std::size_t bound, const std::string& out,
                  const std::string& certificates, const std::string& strategy, unsigned threads) {
  const mpart::Pattern m = mpart::parse_pattern(pattern_text);
  mpart::EnumerationOptions options;
  options.threads = threads;
  if (strategy == "direct")
    options.strategy = mpart::Strategy::Direct;
  else if (strategy == "augment")
    options.strategy = mpart::Strategy::Augment;
  const mpart::ObstructionCatalog catalog = mpart::enumerate_minimal_obstructions(m, bound, options);
  if (!out.empty()) write_file(out, mpart::render_catalog(catalog));
  if (!certificates.empty()) write_file(certificates, mpart::render_certificates(catalog));
  for (const auto& [n, c] : catalog.counts_by_order()) std::cout << "n=" << n << ": " << c << '\n';
  return kYes;
}

int cmd_verify(int theorem, bool all, std::size_t slack) {
  bool pass = true;
  const int first = all ? 1 : theorem;
  const int last = all ? 10 : theorem;
  if (!all && (theorem < 1 || theorem > 10)) throw std::out_of_range("theorem index must be 1..10");
  for (int i = first; i <= last; ++i) {
    std::size_t k = slack;
    if (all) k = std::min(slack, mpart::kMaxObstructionBound - mpart::family_base_order(i));
    const auto report = mpart::verify_theorem(i, k);
    std::cout << report.render();
    pass = pass && report.pass;
  }
  return pass ? kYes : kNo;
}

int cmd_families(int theorem, std::size_t max_n) {
  if (theorem == 1) {
    std::cout << "# family M1 max-n " << max_n << '\n';
    for (const auto& d : mpart::family_M1(max_n)) std::cout << mpart::render(d) << '\n';
  } else if (theorem == 7) {
    std::cout << mpart::frozen_strict_split_catalog_text();
  } else {
    std::cout << mpart::frozen_family_text(theorem);
  }
  return kYes;
}

int cmd_diff(const std::string& a_path, const std::string& b_path) {
  const auto a = mpart::parse_catalog(read_file(a_path));
  const auto b = mpart::parse_catalog(read_file(b_path));
  auto canonical_keys = [](const mpart::CatalogFile& f) {
    std::vector<std::string> keys;
    for (const auto& d : f.digraphs) keys.push_back(mpart::canonical(d).key);
    return keys;
  };
  const mpart::CatalogDiff diff = mpart::catalog_diff(canonical_keys(a), canonical_keys(b));
  for (const auto& k : diff.only_a) std::cout << "ONLY-A " << k << '\n';
  for (const auto& k : diff.only_b) std::cout << "ONLY-B " << k << '\n';
  return diff.empty() ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix partitions of digraphs and their minimal obstructions"};
  app.require_subcommand(1);

  std::string pattern;
  std::string digraph;
  bool witness = false;
  bool obstruction = false;
  auto* solve = app.add_subcommand("solve", "Decide whether a digraph has an M-partition");
  solve->add_option("--pattern", pattern, "Pattern rows such as 0*,*0, or M1..M10")->required();
  solve->add_option("--digraph", digraph, "Digraph as <n>:<pairs>")->required();
  solve->add_flag("--witness", witness, "Print the partition as vertex:part lines");
  solve->add_flag("--obstruction", obstruction, "On NO, print an embedded minimal obstruction");

  auto* classify = app.add_subcommand("classify", "Map a 2x2 pattern to M1..M10");
  classify->add_option("--pattern", pattern, "2x2 pattern")->required();

  std::size_t bound = 0;
  std::string out;
  std::string certificates;
  std::string strategy = "auto";
  unsigned threads = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List all minimal obstructions up to a bound");
  enumerate->add_option("--pattern", pattern, "Pattern")->required();
  enumerate->add_option("--bound", bound, "Largest order searched (at most 7)")->required();
  enumerate->add_option("--out", out, "Catalog output file");
  enumerate->add_option("--certificates", certificates, "Certificate output file");
  enumerate->add_option("--strategy", strategy, "auto, direct or augment")
      ->check(CLI::IsMember({"auto", "direct", "augment"}));
  enumerate->add_option("--threads", threads, "Worker threads, 0 for all cores");

  int theorem = 0;
  bool all = false;
  std::size_t slack = 1;
  auto* verify = app.add_subcommand("verify", "Compare enumeration with an obstruction family");
  auto* theorem_opt = verify->add_option("--theorem", theorem, "Pattern index 1..10");
  auto* all_opt = verify->add_flag("--all", all, "Verify all ten patterns");
  theorem_opt->excludes(all_opt);
  verify->add_option("--slack", slack, "Orders searched beyond the family");

  std::size_t max_n = 5;
  auto* families = app.add_subcommand("families", "Print an obstruction family");
  families->add_option("--theorem", theorem, "Pattern index 1..10")->required();
  families->add_option("--max-n", max_n, "Largest odd cycle for M1");

  std::string a_path;
  std::string b_path;
  auto* diff = app.add_subcommand("diff", "Compare two catalog files up to isomorphism");
  diff->add_option("a", a_path, "First catalog")->required();
  diff->add_option("b", b_path, "Second catalog")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*solve) return cmd_solve(pattern, digraph, witness, obstruction);
    if (*classify) return cmd_classify(pattern);
    if (*enumerate) return cmd_enumerate(pattern, bound, out, certificates, strategy, threads);
    if (*verify) {
      if (!all && theorem_opt->count() == 0) throw std::invalid_argument("verify needs --theorem or --all");
      return cmd_verify(theorem, all, slack);
    }
    if (*families) return cmd_families(theorem, max_n);
    if (*diff) return cmd_diff(a_path, b_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
