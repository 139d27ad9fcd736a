#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpart/digraph.hpp"
#include "mpart/pattern.hpp"
#include "mpart/two_sat.hpp"

namespace mpart {

// parts[v] is the 0-based part of vertex v. Text output shows parts 1-based.
struct Partition {
  std::vector<std::uint8_t> parts;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Whether x in part i and y in part j respects every constraint between them.
bool placement_allowed(const Digraph& d, const Pattern& m, Vertex x, std::size_t i, Vertex y, std::size_t j);

// Throws std::invalid_argument if p does not assign each vertex a part < m.
bool check_partition(const Digraph& d, const Pattern& m, const Partition& p);

// Restriction of p to `vertices` (ascending), matching induced(d, vertices).
Partition restrict_partition(const Partition& p, std::span<const Vertex> vertices);

// Largest search space the brute-force solver accepts, parts^order.
inline constexpr std::uint64_t kBruteForceLimit = std::uint64_t{1} << 20;

// Backtracking over all assignments. Throws std::length_error past the limit.
std::optional<Partition> solve_bruteforce(const Digraph& d, const Pattern& m);

// One variable per vertex, true meaning part 2; one clause per forbidden
// joint placement of a vertex pair.
TwoSatInstance build_2sat(const Digraph& d, const Pattern& m);

// Star-diagonal 2x2 patterns put everything in the star part, other 2x2
// patterns go through 2-SAT, larger patterns through brute force. Every
// returned partition has passed check_partition.
std::optional<Partition> solve(const Digraph& d, const Pattern& m);

inline bool is_partitionable(const Digraph& d, const Pattern& m) { return solve(d, m).has_value(); }

struct EmbeddedObstruction {
  std::vector<Vertex> vertices;  // ascending, into the input digraph
  Digraph digraph;               // induced(input, vertices)
};

// Deletes vertices in ascending order whenever the rest stays
// non-partitionable. Throws std::invalid_argument if d is partitionable.
EmbeddedObstruction find_embedded_minimal_obstruction(const Digraph& d, const Pattern& m);

}  // namespace mpart
