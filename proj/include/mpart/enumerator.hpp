#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mpart/digraph.hpp"
#include "mpart/pattern.hpp"
#include "mpart/solver.hpp"

namespace mpart {

// Largest order enumerate_digraphs generates directly.
inline constexpr std::size_t kMaxDirectOrder = 5;
// Largest bound enumerate_minimal_obstructions accepts.
inline constexpr std::size_t kMaxObstructionBound = 7;

// One canonical representative per isomorphism class of loopless digraphs on
// n vertices, sorted by key. Results are cached per process.
const std::vector<Digraph>& enumerate_digraphs(std::size_t n);

struct DeletionWitness {
  Vertex deleted = 0;
  Partition partition;  // of delete_vertex(d, deleted)

  friend bool operator==(const DeletionWitness&, const DeletionWitness&) = default;
};

struct MinimalityCheck {
  bool partitionable = false;
  bool minimal = false;
  // One per vertex when minimal, otherwise whatever was found before failing.
  std::vector<DeletionWitness> witnesses;

  explicit operator bool() const { return minimal; }
};

// Not partitionable, but every one-vertex deletion is. One-vertex deletions
// suffice because partitionability is hereditary.
MinimalityCheck is_minimal_obstruction(const Digraph& d, const Pattern& m);

struct CatalogEntry {
  std::string key;  // render(digraph); digraph is canonical
  Digraph digraph;
  std::vector<DeletionWitness> witnesses;
};

struct ObstructionCatalog {
  Pattern pattern{2};
  std::size_t bound = 0;
  std::vector<CatalogEntry> entries;  // sorted by key

  // order -> number of entries, for every order 2..bound.
  std::map<std::size_t, std::size_t> counts_by_order() const;
  std::vector<std::string> keys() const;
};

enum class Strategy {
  Auto,     // direct up to order 5, augmentation beyond
  Direct,   // direct only; bound <= 5
  Augment,  // augmentation from order 1
};

struct EnumerationOptions {
  Strategy strategy = Strategy::Auto;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// All minimal obstructions with at most `bound` vertices. Augmentation
// extends each partitionable canonical digraph on n-1 vertices by one vertex
// in every possible way; a minimal obstruction on n vertices has all of its
// (n-1)-vertex induced subdigraphs partitionable, so none is missed.
ObstructionCatalog enumerate_minimal_obstructions(const Pattern& m, std::size_t bound,
                                                  const EnumerationOptions& options = {});

struct CatalogDiff {
  std::vector<std::string> only_a;
  std::vector<std::string> only_b;

  bool empty() const { return only_a.empty() && only_b.empty(); }
};

CatalogDiff catalog_diff(const std::vector<std::string>& a, const std::vector<std::string>& b);
CatalogDiff catalog_diff(const ObstructionCatalog& a, const ObstructionCatalog& b);

}  // namespace mpart
