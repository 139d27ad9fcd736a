#include "mpart/enumerator.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace mpart {

const std::vector<Digraph>& enumerate_digraphs(std::size_t n) {
  if (n > kMaxDirectOrder) throw std::out_of_range("enumerate_digraphs supports n <= 5");
  static std::array<std::vector<Digraph>, kMaxDirectOrder + 1> cache;
  static std::array<std::once_flag, kMaxDirectOrder + 1> once;
  std::call_once(once[n], [n] {
    const std::size_t pairs = n * (n - (n > 0)) / 2;
    const std::uint64_t total = std::uint64_t{1} << (2 * pairs);
    // Codes compare like keys, so ascending codes give key order.
    for (std::uint64_t code = 0; code < total; ++code) {
      Digraph d = Digraph::unpack(n, code);
      if (is_canonical(d)) cache[n].push_back(d);
    }
  });
  return cache[n];
}

MinimalityCheck is_minimal_obstruction(const Digraph& d, const Pattern& m) {
  MinimalityCheck check;
  check.partitionable = is_partitionable(d, m);
  if (check.partitionable) return check;
  for (Vertex v = 0; v < d.order(); ++v) {
    auto p = solve(delete_vertex(d, v), m);
    if (!p) return check;
    check.witnesses.push_back(DeletionWitness{v, std::move(*p)});
  }
  check.minimal = true;
  return check;
}

std::map<std::size_t, std::size_t> ObstructionCatalog::counts_by_order() const {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t n = 2; n <= bound; ++n) counts[n] = 0;
  for (const auto& e : entries) ++counts[e.digraph.order()];
  return counts;
}

std::vector<std::string> ObstructionCatalog::keys() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.key);
  return out;
}

namespace {

std::uint64_t canonical_code(const Digraph& d) { return canonical_representative(d).pack(); }

struct Level {
  std::vector<Digraph> partitionable;
  std::vector<Digraph> obstructions;
};

Level direct_level(const Pattern& m, std::size_t n) {
  Level level;
  for (const Digraph& d : enumerate_digraphs(n)) {
    if (is_partitionable(d, m))
      level.partitionable.push_back(d);
    else if (is_minimal_obstruction(d, m))
      level.obstructions.push_back(d);
  }
  return level;
}

struct Found {
  std::unordered_set<std::uint64_t> partitionable;
  std::unordered_set<std::uint64_t> obstructions;
};

void extend_parent(const Digraph& parent, const Pattern& m, bool keep_partitionable, Found& found) {
  const std::size_t n = parent.order() + 1;
  Digraph child(n);
  for (Vertex x = 0; x + 1 < n; ++x)
    for (Vertex y = x + 1; y + 1 < n; ++y) child.set_state(x, y, parent.state(x, y));
  const std::uint64_t attachments = std::uint64_t{1} << (2 * (n - 1));
  for (std::uint64_t a = 0; a < attachments; ++a) {
    for (Vertex x = 0; x + 1 < n; ++x)
      child.set_state(x, n - 1, static_cast<ArcState>((a >> (2 * x)) & 3u));
    if (is_partitionable(child, m)) {
      if (keep_partitionable) found.partitionable.insert(canonical_code(child));
      continue;
    }
    // Deleting the new vertex gives back the parent, which is partitionable.
    bool minimal = true;
    for (Vertex v = 0; v + 1 < n && minimal; ++v) minimal = is_partitionable(delete_vertex(child, v), m);
    if (minimal) found.obstructions.insert(canonical_code(child));
  }
}

std::vector<Digraph> sorted_digraphs(std::size_t n, const std::unordered_set<std::uint64_t>& codes) {
  std::vector<std::uint64_t> ordered(codes.begin(), codes.end());
  std::sort(ordered.begin(), ordered.end());
  std::vector<Digraph> out;
  out.reserve(ordered.size());
  for (auto code : ordered) out.push_back(Digraph::unpack(n, code));
  return out;
}

Level augmented_level(const Pattern& m, const std::vector<Digraph>& parents, bool keep_partitionable,
                      unsigned threads) {
  const std::size_t n = parents.empty() ? 0 : parents.front().order() + 1;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(parents.size(), 1)));

  // Each worker owns a strided slice of the parents and its own sets; the
  // union is order-independent.
  std::vector<Found> per_worker(threads);
  auto work = [&](unsigned w) {
    for (std::size_t k = w; k < parents.size(); k += threads)
      extend_parent(parents[k], m, keep_partitionable, per_worker[w]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  Found merged;
  for (auto& f : per_worker) {
    merged.partitionable.merge(f.partitionable);
    merged.obstructions.merge(f.obstructions);
  }
  Level level;
  if (n == 0) return level;
  level.partitionable = sorted_digraphs(n, merged.partitionable);
  level.obstructions = sorted_digraphs(n, merged.obstructions);
  return level;
}

}  // namespace

ObstructionCatalog enumerate_minimal_obstructions(const Pattern& m, std::size_t bound,
                                                  const EnumerationOptions& options) {
  if (bound > kMaxObstructionBound) throw std::out_of_range("obstruction bound must be at most 7");
  if (options.strategy == Strategy::Direct && bound > kMaxDirectOrder)
    throw std::out_of_range("direct enumeration supports bound <= 5");

  ObstructionCatalog catalog;
  catalog.pattern = m;
  catalog.bound = bound;
  // Every digraph has a partition with everything in the star part.
  if (m.parts() == 2 && m.has_star_diagonal()) return catalog;

  std::vector<Digraph> found;
  std::vector<Digraph> parents;
  for (std::size_t n = 1; n <= bound; ++n) {
    const bool direct = options.strategy == Strategy::Direct ||
                        (options.strategy == Strategy::Auto && n <= kMaxDirectOrder) || n == 1;
    Level level = direct ? direct_level(m, n) : augmented_level(m, parents, n < bound, options.threads);
    found.insert(found.end(), level.obstructions.begin(), level.obstructions.end());
    parents = std::move(level.partitionable);
  }

  for (Digraph& d : found) {
    MinimalityCheck check = is_minimal_obstruction(d, m);
    if (!check) throw std::logic_error("enumerated digraph " + render(d) + " failed re-verification");
    catalog.entries.push_back(CatalogEntry{render(d), d, std::move(check.witnesses)});
  }
  std::sort(catalog.entries.begin(), catalog.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.key < b.key; });
  return catalog;
}

CatalogDiff catalog_diff(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::set<std::string> sa(a.begin(), a.end());
  const std::set<std::string> sb(b.begin(), b.end());
  CatalogDiff diff;
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(diff.only_a));
  std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(), std::back_inserter(diff.only_b));
  return diff;
}

CatalogDiff catalog_diff(const ObstructionCatalog& a, const ObstructionCatalog& b) {
  return catalog_diff(a.keys(), b.keys());
}

}  // namespace mpart
