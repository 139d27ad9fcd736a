#include <queue>

#include <stdexcept>

#include "doctest.h"
#include "mpart/enumerator.hpp"
#include "mpart/solver.hpp"
#include "oracles.hpp"

using namespace mpart;

namespace {

Partition parts(std::initializer_list<std::uint8_t> p) { return Partition{std::vector<std::uint8_t>(p)}; }

// Superorientation of C_k: edge v -- v+1 gets states[v].
Digraph cycle(const std::vector<ArcState>& states) {
  Digraph d(states.size());
  for (Vertex v = 0; v < states.size(); ++v) d.set_state(v, (v + 1) % states.size(), states[v]);
  return d;
}

bool reaches(const std::vector<std::vector<std::size_t>>& graph, std::size_t from, std::size_t to) {
  std::vector<bool> seen(graph.size(), false);
  std::queue<std::size_t> queue;
  queue.push(from);
  seen[from] = true;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop();
    if (u == to) return true;
    for (auto w : graph[u])
      if (!seen[w]) {
        seen[w] = true;
        queue.push(w);
      }
  }
  return false;
}

}  // namespace

TEST_CASE("check_partition") {
  const Pattern m1 = canonical_pattern(1);
  const Pattern m2 = canonical_pattern(2);
  CHECK(check_partition(parse_digraph("2:."), m1, parts({0, 0})));
  CHECK(check_partition(parse_digraph("2:="), m1, parts({0, 1})));
  CHECK_FALSE(check_partition(parse_digraph("2:="), m1, parts({0, 0})));
  for (std::uint8_t a = 0; a < 2; ++a)
    for (std::uint8_t b = 0; b < 2; ++b) CHECK_FALSE(check_partition(parse_digraph("2:="), m2, parts({a, b})));

  CHECK_THROWS_AS(check_partition(parse_digraph("2:."), m1, parts({0})), std::invalid_argument);
  CHECK_THROWS_AS(check_partition(parse_digraph("2:."), m1, parts({0, 2})), std::invalid_argument);
}

TEST_CASE("check_partition matches the definition on every assignment") {
  for (const auto& m : zero_one_diagonal_patterns())
    for (std::size_t n = 0; n <= 3; ++n)
      for (const auto& d : oracle::all_labelled(n))
        oracle::for_each_assignment(n, 2, [&](const std::vector<std::size_t>& a) {
          Partition p;
          for (auto x : a) p.parts.push_back(static_cast<std::uint8_t>(x));
          CHECK(check_partition(d, m, p) == oracle::valid(d, m, a));
        });
}

TEST_CASE("solve_bruteforce") {
  for (int i = 1; i <= 10; ++i) CHECK(solve_bruteforce(parse_digraph("1:"), canonical_pattern(i)).has_value());
  CHECK(solve_bruteforce(parse_digraph("0:"), canonical_pattern(6)).has_value());
  CHECK_FALSE(solve_bruteforce(parse_digraph("3:>.>"), canonical_pattern(2)).has_value());

  const Digraph c5 = cycle({ArcState::Fwd, ArcState::Bwd, ArcState::Digon, ArcState::Fwd, ArcState::Bwd});
  CHECK(render(c5) == "5:>..><..=.>");
  CHECK_FALSE(solve_bruteforce(c5, canonical_pattern(1)).has_value());

  // Guard: 4 parts on 11 vertices is 2^22 assignments.
  CHECK_THROWS_AS(solve_bruteforce(Digraph(11), parse_pattern("0***,*0**,**0*,***0")), std::length_error);
  CHECK(solve_bruteforce(Digraph(10), parse_pattern("0***,*0**,**0*,***0")).has_value());
}

TEST_CASE("build_2sat") {
  const auto digon_m2 = build_2sat(parse_digraph("2:="), canonical_pattern(2));
  CHECK(digon_m2.variables == 2);
  CHECK(digon_m2.clauses.size() == 4);
  CHECK(std::holds_alternative<Unsatisfiable>(solve_2sat(digon_m2)));

  // Non-adjacent pair under M5 must share a part.
  const auto empty_m5 = build_2sat(parse_digraph("2:."), canonical_pattern(5));
  for (bool a : {false, true})
    for (bool b : {false, true}) CHECK(satisfies(empty_m5, {a, b}) == (a == b));
  CHECK(std::holds_alternative<std::vector<bool>>(solve_2sat(empty_m5)));

  for (const auto& m : zero_one_diagonal_patterns()) {
    if (m.at(0, 0) != Cell::Zero && m.at(1, 1) != Cell::Zero) continue;
    CHECK(std::holds_alternative<std::vector<bool>>(solve_2sat(build_2sat(Digraph(6), m))));
  }
  CHECK_THROWS_AS(build_2sat(Digraph(2), parse_pattern("000,000,000")), std::invalid_argument);
}

TEST_CASE("clause count stays within 4 per pair") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = trial % 9;
    const Digraph d = oracle::random_digraph(rng, n);
    const auto& ms = zero_one_diagonal_patterns();
    const auto instance = build_2sat(d, ms[rng() % ms.size()]);
    CHECK(instance.clauses.size() <= 4 * (n * (n > 0 ? n - 1 : 0) / 2) + n);
  }
}

TEST_CASE("solve dispatch") {
  const Pattern star = parse_pattern("*0,1*");
  const auto p = solve(parse_digraph("3:>.>"), star);
  REQUIRE(p.has_value());
  CHECK(p->parts == std::vector<std::uint8_t>{0, 0, 0});
  const auto q = solve(parse_digraph("3:>.>"), parse_pattern("0*,**"));
  REQUIRE(q.has_value());
  CHECK(q->parts == std::vector<std::uint8_t>{1, 1, 1});

  const Pattern m10 = canonical_pattern(10);
  const Digraph two_digons = parse_digraph("4:=....=");
  CHECK_FALSE(solve(two_digons, m10).has_value());
  CHECK_FALSE(oracle::partitionable(two_digons, m10));
  const Digraph digon_path = parse_digraph("3:=.=");
  CHECK_FALSE(solve(digon_path, m10).has_value());
  CHECK_FALSE(oracle::partitionable(digon_path, m10));

  CHECK(solve(Digraph(0), canonical_pattern(6)).has_value());
  CHECK(solve(Digraph(0), canonical_pattern(6))->parts.empty());

  // Three parts take the backtracking path.
  const Pattern three = parse_pattern("0**,*0*,**0");
  CHECK(solve(parse_digraph("3:..."), three).has_value());
}

TEST_CASE("find_embedded_minimal_obstruction") {
  const Pattern m2 = canonical_pattern(2);
  const Digraph tt3_plus_isolated = parse_digraph("4:>>.>..");
  CHECK_FALSE(is_partitionable(tt3_plus_isolated, m2));
  const auto found = find_embedded_minimal_obstruction(tt3_plus_isolated, m2);
  CHECK(found.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(render(found.digraph) == "3:>>>");
  CHECK(oracle::minimal_obstruction(found.digraph, m2));

  const Digraph path = parse_digraph("3:>.>");
  CHECK(find_embedded_minimal_obstruction(path, m2).digraph == path);

  const Digraph c7 = cycle({ArcState::Fwd, ArcState::Digon, ArcState::Bwd, ArcState::Fwd, ArcState::Fwd,
                            ArcState::Digon, ArcState::Bwd});
  CHECK(find_embedded_minimal_obstruction(c7, canonical_pattern(1)).digraph == c7);

  CHECK_THROWS_AS(find_embedded_minimal_obstruction(parse_digraph("2:."), m2), std::invalid_argument);
}

TEST_CASE("extracted obstructions are minimal for random inputs") {
  std::mt19937_64 rng(47);
  const auto ms = zero_one_diagonal_patterns();
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 3 + trial % 5);
    const Pattern& m = ms[rng() % ms.size()];
    if (is_partitionable(d, m)) continue;
    const auto found = find_embedded_minimal_obstruction(d, m);
    CHECK(induced(d, found.vertices) == found.digraph);
    CHECK(oracle::minimal_obstruction(found.digraph, m));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("2-SAT and brute force agree on every canonical digraph up to order 4") {
  std::size_t mismatches = 0;
  for (const auto& m : zero_one_diagonal_patterns())
    for (std::size_t n = 0; n <= 4; ++n)
      for (const auto& d : enumerate_digraphs(n)) {
        const auto fast = solve(d, m);
        const auto slow = solve_bruteforce(d, m);
        if (fast.has_value() != slow.has_value() || fast.has_value() != oracle::partitionable(d, m)) ++mismatches;
        if (fast) CHECK(check_partition(d, m, *fast));
        if (slow) CHECK(check_partition(d, m, *slow));
        if (!fast) {
          const auto instance = build_2sat(d, m);
          const auto result = solve_2sat(instance);
          REQUIRE(std::holds_alternative<Unsatisfiable>(result));
          const auto var = std::get<Unsatisfiable>(result).conflicting_variable;
          const auto graph = implication_graph(instance);
          CHECK(reaches(graph, Literal(var, false).code(), Literal(var, true).code()));
          CHECK(reaches(graph, Literal(var, true).code(), Literal(var, false).code()));
        }
      }
  CHECK(mismatches == 0);
}

TEST_CASE("2-SAT and brute force agree on random digraphs of order 5 to 8") {
  std::mt19937_64 rng(53);
  const auto ms = zero_one_diagonal_patterns();
  for (int trial = 0; trial < 1000; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 5 + trial % 4);
    const Pattern& m = ms[rng() % ms.size()];
    const auto fast = solve(d, m);
    const auto slow = solve_bruteforce(d, m);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(check_partition(d, m, *fast));
  }
}

TEST_CASE("restricting a witness gives a witness for every induced subdigraph") {
  std::mt19937_64 rng(59);
  const auto ms = zero_one_diagonal_patterns();
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 2 + trial % 7);
    const Pattern& m = ms[rng() % ms.size()];
    const auto p = solve(d, m);
    if (!p) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < d.order(); ++v)
      if (rng() % 2) s.push_back(v);
    CHECK(check_partition(induced(d, s), m, restrict_partition(*p, s)));
    CHECK(is_partitionable(induced(d, s), m));
  }
}

TEST_CASE("decisions are preserved by complement and reverse") {
  for (const auto& m : zero_one_diagonal_patterns()) {
    const Pattern mc = pattern_complement(m);
    const Pattern mt = pattern_transpose(m);
    for (std::size_t n = 0; n <= 4; ++n)
      for (const auto& d : enumerate_digraphs(n)) {
        const bool yes = is_partitionable(d, m);
        CHECK(is_partitionable(complement(d), mc) == yes);
        CHECK(is_partitionable(reverse(d), mt) == yes);
      }
  }
}

TEST_CASE("larger patterns go through backtracking") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Pattern m = oracle::random_pattern(rng, 3);
    const Digraph d = oracle::random_digraph(rng, 1 + trial % 6);
    const auto p = solve(d, m);
    CHECK(p.has_value() == oracle::partitionable(d, m));
    if (p) CHECK(check_partition(d, m, *p));
  }
}
