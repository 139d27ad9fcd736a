#include "mpart/solver.hpp"

#include <stdexcept>
#include <string>

namespace mpart {

bool placement_allowed(const Digraph& d, const Pattern& m, Vertex x, std::size_t i, Vertex y, std::size_t j) {
  const ArcState s = d.state(x, y);
  if (i == j) {
    switch (m.at(i, i)) {
      case Cell::Zero: return s == ArcState::None;
      case Cell::One: return s == ArcState::Digon;
      case Cell::Star: return true;
    }
  }
  const bool forward = s == ArcState::Fwd || s == ArcState::Digon;
  const bool backward = s == ArcState::Bwd || s == ArcState::Digon;
  auto ok = [](Cell c, bool present) {
    return c == Cell::Star || (c == Cell::One) == present;
  };
  return ok(m.at(i, j), forward) && ok(m.at(j, i), backward);
}

bool check_partition(const Digraph& d, const Pattern& m, const Partition& p) {
  if (p.parts.size() != d.order())
    throw std::invalid_argument("partition covers " + std::to_string(p.parts.size()) + " vertices, digraph has " +
                                std::to_string(d.order()));
  for (auto part : p.parts)
    if (part >= m.parts()) throw std::invalid_argument("partition uses a part outside the pattern");
  for (Vertex x = 0; x < d.order(); ++x)
    for (Vertex y = x + 1; y < d.order(); ++y)
      if (!placement_allowed(d, m, x, p.parts[x], y, p.parts[y])) return false;
  return true;
}

Partition restrict_partition(const Partition& p, std::span<const Vertex> vertices) {
  Partition out;
  out.parts.reserve(vertices.size());
  for (Vertex v : vertices) {
    if (v >= p.parts.size()) throw std::out_of_range("restrict_partition: vertex out of range");
    out.parts.push_back(p.parts[v]);
  }
  return out;
}

namespace {

bool backtrack(const Digraph& d, const Pattern& m, Vertex v, Partition& p) {
  if (v == d.order()) return true;
  for (std::size_t part = 0; part < m.parts(); ++part) {
    bool fits = true;
    for (Vertex u = 0; u < v && fits; ++u) fits = placement_allowed(d, m, u, p.parts[u], v, part);
    if (!fits) continue;
    p.parts[v] = static_cast<std::uint8_t>(part);
    if (backtrack(d, m, v + 1, p)) return true;
  }
  return false;
}

std::optional<Partition> validated(const Digraph& d, const Pattern& m, Partition p) {
  if (!check_partition(d, m, p)) throw std::logic_error("solver produced an invalid partition");
  return p;
}

}  // namespace

std::optional<Partition> solve_bruteforce(const Digraph& d, const Pattern& m) {
  std::uint64_t space = 1;
  for (std::size_t k = 0; k < d.order(); ++k) {
    space *= m.parts();
    if (space > kBruteForceLimit)
      throw std::length_error("brute-force search space exceeds 2^20 assignments");
  }
  if (m.parts() > 255) throw std::length_error("too many parts");
  Partition p;
  p.parts.assign(d.order(), 0);
  if (!backtrack(d, m, 0, p)) return std::nullopt;
  return validated(d, m, std::move(p));
}

TwoSatInstance build_2sat(const Digraph& d, const Pattern& m) {
  if (m.parts() != 2) throw std::invalid_argument("2-SAT reduction needs a 2x2 pattern");
  TwoSatInstance instance;
  instance.variables = d.order();
  for (Vertex x = 0; x < d.order(); ++x)
    for (Vertex y = x + 1; y < d.order(); ++y)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          if (!placement_allowed(d, m, x, i, y, j)) {
            // not (x in part i and y in part j); "x in part 1" is literal x.
            instance.clauses.push_back(Clause{Literal(x, i == 1), Literal(y, j == 1)});
          }
  return instance;
}

std::optional<Partition> solve(const Digraph& d, const Pattern& m) {
  if (m.parts() == 2 && m.has_star_diagonal()) {
    const auto star = static_cast<std::uint8_t>(m.at(0, 0) == Cell::Star ? 0 : 1);
    return validated(d, m, Partition{std::vector<std::uint8_t>(d.order(), star)});
  }
  if (m.parts() == 2) {
    const TwoSatResult result = solve_2sat(build_2sat(d, m));
    const auto* assignment = std::get_if<std::vector<bool>>(&result);
    if (assignment == nullptr) return std::nullopt;
    Partition p;
    p.parts.reserve(d.order());
    for (bool b : *assignment) p.parts.push_back(b ? 1 : 0);
    return validated(d, m, std::move(p));
  }
  return solve_bruteforce(d, m);
}

EmbeddedObstruction find_embedded_minimal_obstruction(const Digraph& d, const Pattern& m) {
  if (is_partitionable(d, m)) throw std::invalid_argument("digraph is partitionable, nothing to extract");
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < d.order(); ++v) kept.push_back(v);
  // One ascending pass suffices: a vertex that had to stay still has to
  // stay after later deletions, by heredity.
  for (Vertex v = 0; v < d.order(); ++v) {
    std::vector<Vertex> trial;
    for (Vertex u : kept)
      if (u != v) trial.push_back(u);
    if (!is_partitionable(induced(d, trial), m)) kept = std::move(trial);
  }
  Digraph sub = induced(d, kept);
  for (std::size_t k = 0; k < sub.order(); ++k)
    if (!is_partitionable(delete_vertex(sub, k), m))
      throw std::logic_error("extracted obstruction is not minimal");
  return EmbeddedObstruction{std::move(kept), std::move(sub)};
}

}  // namespace mpart
