#include "mpart/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "frozen_data.hpp"

namespace mpart {

namespace {

bool by_order_then_key(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return render(a) < render(b);
}

std::vector<std::string> keys_of(const std::vector<Digraph>& ds) {
  std::vector<std::string> out;
  out.reserve(ds.size());
  for (const auto& d : ds) out.push_back(render(d));
  return out;
}

void check_finite_index(int index) {
  if (index < 2 || index > 10 || index == 7)
    throw std::out_of_range("finite families exist for M2..M6 and M8..M10");
}

}  // namespace

std::vector<Digraph> superorientations(std::size_t order, const std::vector<Edge>& edges) {
  constexpr std::array<ArcState, 3> kChoices = {ArcState::Fwd, ArcState::Bwd, ArcState::Digon};
  std::set<std::string> seen;
  std::vector<Digraph> out;
  std::vector<std::size_t> choice(edges.size(), 0);
  while (true) {
    Digraph d(order);
    for (std::size_t e = 0; e < edges.size(); ++e) d.set_state(edges[e].first, edges[e].second, kChoices[choice[e]]);
    Digraph rep = canonical_representative(d);
    if (seen.insert(render(rep)).second) out.push_back(rep);
    std::size_t e = 0;
    while (e < choice.size() && ++choice[e] == kChoices.size()) choice[e++] = 0;
    if (e == choice.size()) break;
  }
  std::sort(out.begin(), out.end(), by_order_then_key);
  return out;
}

Digraph biorientation(std::size_t order, const std::vector<Edge>& edges) {
  Digraph d(order);
  for (const auto& [x, y] : edges) d.set_state(x, y, ArcState::Digon);
  return d;
}

std::vector<Digraph> family_M1(std::size_t max_n) {
  if (max_n < 3) throw std::out_of_range("family_M1 needs max_n >= 3");
  if (max_n > Digraph::kMaxOrder) throw std::out_of_range("family_M1 supports max_n <= 12");
  std::vector<Digraph> out;
  for (std::size_t k = 3; k <= max_n; k += 2) {
    std::vector<Edge> cycle;
    for (Vertex v = 0; v < k; ++v) cycle.emplace_back(v, (v + 1) % k);
    auto members = superorientations(k, cycle);
    out.insert(out.end(), members.begin(), members.end());
  }
  return out;
}

std::string_view frozen_family_text(int index) {
  check_finite_index(index);
  return detail::frozen_family_text(index);
}

std::vector<Digraph> family_finite(int index) {
  return parse_catalog(frozen_family_text(index)).digraphs;
}

std::string_view frozen_strict_split_catalog_text() { return detail::frozen_strict_split_catalog_text(); }
std::string_view frozen_strict_split_certificate_text() { return detail::frozen_strict_split_certificate_text(); }

ObstructionCatalog frozen_strict_split_catalog() {
  return parse_certified_catalog(frozen_strict_split_catalog_text(), frozen_strict_split_certificate_text());
}

std::size_t family_base_order(int theorem) {
  if (theorem < 1 || theorem > 10) throw std::out_of_range("theorem index must be 1..10");
  if (theorem == 1 || theorem == 7) return 5;
  std::size_t base = 0;
  for (const auto& d : family_finite(theorem)) base = std::max(base, d.order());
  return base;
}

std::string VerificationReport::render() const {
  std::string out = "THEOREM " + std::to_string(theorem) + (pass ? " PASS\n" : " FAIL\n");
  out += "BOUND " + std::to_string(bound) + '\n';
  for (const auto& [n, c] : counts) out += "ORDER " + std::to_string(n) + " COUNT " + std::to_string(c) + '\n';
  for (const auto& k : only_enumerated) out += "DIFF-ONLY-ENUM " + k + '\n';
  for (const auto& k : only_family) out += "DIFF-ONLY-FAMILY " + k + '\n';
  for (const auto& n : notes) out += "NOTE " + n + '\n';
  return out;
}

namespace {

void note_order_three(const Pattern& m, VerificationReport& report) {
  std::string partitionable;
  std::size_t count = 0;
  for (const auto& d : enumerate_digraphs(3)) {
    if (!is_partitionable(d, m)) continue;
    ++count;
    partitionable += ' ' + render(d);
  }
  report.notes.push_back("order-3 partitionable " + std::to_string(count) + ":" + partitionable);
}

void note_three_vertex_biorientations(const Pattern& m, VerificationReport& report) {
  const std::vector<std::pair<std::string, std::vector<Edge>>> graphs = {
      {"3K1", {}},
      {"K1+K2", {{0, 1}}},
      {"P3", {{0, 1}, {1, 2}}},
      {"K3", {{0, 1}, {1, 2}, {0, 2}}},
  };
  for (const auto& [name, edges] : graphs) {
    const Digraph d = canonical_representative(biorientation(3, edges));
    const bool obstruction = static_cast<bool>(is_minimal_obstruction(d, m));
    report.notes.push_back("biorientation " + name + ' ' + mpart::render(d) +
                           (obstruction ? " minimal-obstruction" : " partitionable"));
  }
}

void note_two_k2(const std::vector<std::string>& family, VerificationReport& report) {
  const auto classes = superorientations(4, {{0, 1}, {2, 3}});
  std::size_t inside = 0;
  for (const auto& d : classes)
    if (std::find(family.begin(), family.end(), render(d)) != family.end()) ++inside;
  report.notes.push_back("superorientations of 2K2: " + std::to_string(classes.size()) + " classes, " +
                         std::to_string(inside) + " in family");
}

}  // namespace

VerificationReport verify_theorem(int theorem, std::size_t slack, const EnumerationOptions& options) {
  const std::size_t base = family_base_order(theorem);
  const std::size_t bound = base + slack;
  if (bound > kMaxObstructionBound)
    throw std::out_of_range("theorem " + std::to_string(theorem) + " with slack " + std::to_string(slack) +
                            " needs bound " + std::to_string(bound) + ", above 7");

  const Pattern& m = canonical_pattern(theorem);
  const ObstructionCatalog catalog = enumerate_minimal_obstructions(m, bound, options);

  VerificationReport report;
  report.theorem = theorem;
  report.bound = bound;
  report.counts = catalog.counts_by_order();

  bool certified = true;
  for (const auto& entry : catalog.entries) certified = certified && verify_entry(m, entry).ok();
  if (!certified) report.notes.push_back("an enumerated entry failed re-verification");

  std::vector<std::string> family;
  std::vector<std::string> enumerated = catalog.keys();
  if (theorem == 1) {
    family = keys_of(family_M1(bound));
  } else if (theorem == 7) {
    const ObstructionCatalog frozen = frozen_strict_split_catalog();
    if (!verify_catalog(frozen)) {
      certified = false;
      report.notes.push_back("frozen M7 catalog failed certificate re-verification");
    }
    family = frozen.keys();
    std::erase_if(enumerated, [&](const std::string& k) { return parse_digraph(k).order() > frozen.bound; });
    report.notes.push_back("no external family; compared with the frozen catalog up to order " +
                           std::to_string(frozen.bound));
  } else {
    family = keys_of(family_finite(theorem));
  }

  const CatalogDiff diff = catalog_diff(enumerated, family);
  report.only_enumerated = diff.only_a;
  report.only_family = diff.only_b;

  if (theorem >= 8) note_order_three(m, report);
  if (theorem == 8) note_two_k2(family, report);
  if (theorem == 10) note_three_vertex_biorientations(m, report);

  report.pass = certified && diff.empty();
  return report;
}

// Any two strict split partitions differ by moving at most one vertex each
// way: two clique vertices are adjacent, so at most one of them can join the
// independent side, and vice versa. Searching those moves from one solution
// finds the partition with the largest clique, ties broken by the smallest
// part vector.
std::optional<StrictSplitPartition> strict_split_check(const Digraph& d) {
  const Pattern& m7 = canonical_pattern(7);
  const auto p = solve(d, m7);
  if (!p) return std::nullopt;
  const std::size_t n = d.order();
  Partition best = *p;
  auto clique_size = [](const Partition& q) { return std::count(q.parts.begin(), q.parts.end(), 1); };
  auto consider = [&](const Partition& q) {
    const auto a = clique_size(q);
    const auto b = clique_size(best);
    if ((a > b || (a == b && q.parts < best.parts)) && check_partition(d, m7, q)) best = q;
  };
  for (std::size_t u = 0; u <= n; ++u)
    for (std::size_t v = 0; v <= n; ++v) {
      Partition q = *p;
      if (u < n) q.parts[u] ^= 1;
      if (v < n && v != u) q.parts[v] ^= 1;
      consider(q);
    }
  StrictSplitPartition out;
  for (Vertex v = 0; v < n; ++v) (best.parts[v] == 0 ? out.independent : out.clique).push_back(v);
  return out;
}

}  // namespace mpart
