#pragma once

// Obstruction families for the ten canonical 2x2 patterns and the
// verification that enumeration reproduces them.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpart/catalog.hpp"
#include "mpart/digraph.hpp"
#include "mpart/enumerator.hpp"

namespace mpart {

using Edge = std::pair<Vertex, Vertex>;

// Every way of turning each edge into a forward arc, a backward arc or a
// digon, one canonical representative per class, sorted by key.
std::vector<Digraph> superorientations(std::size_t order, const std::vector<Edge>& edges);
// Every edge becomes a digon.
Digraph biorientation(std::size_t order, const std::vector<Edge>& edges);

// Superorientations of the odd cycles C3, C5, ... up to max_n vertices.
std::vector<Digraph> family_M1(std::size_t max_n);

// Frozen obstruction families for M2..M6 and M8..M10.
std::vector<Digraph> family_finite(int index);
// Raw text of the frozen family file (catalog format).
std::string_view frozen_family_text(int index);

// Frozen M7 catalog with certificates.
std::string_view frozen_strict_split_catalog_text();
std::string_view frozen_strict_split_certificate_text();
ObstructionCatalog frozen_strict_split_catalog();
inline constexpr std::size_t kStrictSplitBound = 5;

// Orders the comparison is anchored at before slack is added: the largest
// member of a finite family, 5 for the odd-cycle family and for M7.
std::size_t family_base_order(int theorem);

struct VerificationReport {
  int theorem = 0;
  std::size_t bound = 0;
  bool pass = false;
  std::map<std::size_t, std::size_t> counts;  // order -> enumerated obstructions
  std::vector<std::string> only_enumerated;
  std::vector<std::string> only_family;
  std::vector<std::string> notes;

  // Lines: THEOREM <i> <PASS|FAIL>, BOUND <b>, ORDER <n> COUNT <c>,
  // DIFF-ONLY-ENUM <key>, DIFF-ONLY-FAMILY <key>, NOTE <text>.
  std::string render() const;
};

// Enumerates up to family_base_order(i) + slack (at most 7) and compares with
// the family. Throws std::out_of_range for a bad index or bound.
VerificationReport verify_theorem(int theorem, std::size_t slack, const EnumerationOptions& options = {});

struct StrictSplitPartition {
  std::vector<Vertex> independent;  // V0
  std::vector<Vertex> clique;       // V1, a strong clique
};

// M7-partition read as (independent set, strong clique). Among all such
// partitions, returns one with the largest clique.
std::optional<StrictSplitPartition> strict_split_check(const Digraph& d);

}  // namespace mpart
