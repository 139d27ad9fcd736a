#include <chrono>
#include <set>

#include <stdexcept>

#include "doctest.h"
#include "mpart/digraph.hpp"
#include "mpart/enumerator.hpp"
#include "oracles.hpp"

using namespace mpart;

TEST_CASE("arc reads the pair state in both directions") {
  const Digraph digon = parse_digraph("2:=");
  CHECK(digon.arc(0, 1));
  CHECK(digon.arc(1, 0));

  const Digraph arc = parse_digraph("2:>");
  CHECK(arc.arc(0, 1));
  CHECK_FALSE(arc.arc(1, 0));

  const Digraph path = parse_digraph("3:>.>");
  CHECK_FALSE(path.arc(0, 2));
  CHECK_FALSE(path.arc(2, 0));
  CHECK(path.arc(1, 2));

  CHECK_THROWS_AS(path.arc(0, 3), std::out_of_range);
  CHECK_THROWS_AS(path.arc(1, 1), std::invalid_argument);
}

TEST_CASE("state and set_state agree from either endpoint") {
  Digraph d(4);
  d.set_state(3, 1, ArcState::Fwd);  // 3 -> 1
  CHECK(d.state(1, 3) == ArcState::Bwd);
  CHECK(d.arc(3, 1));
  CHECK_FALSE(d.arc(1, 3));
  CHECK(render(d) == "4:....<.");
}

TEST_CASE("complement") {
  CHECK(render(complement(parse_digraph("2:="))) == "2:.");
  CHECK(render(complement(parse_digraph("2:>"))) == "2:<");
  for (const auto& d : oracle::all_labelled(3)) {
    const Digraph c = complement(d);
    for (Vertex x = 0; x < 3; ++x)
      for (Vertex y = 0; y < 3; ++y)
        if (x != y) CHECK(c.arc(x, y) == !d.arc(x, y));
  }
  REQUIRE(enumerate_digraphs(3).size() == 16);
  for (const auto& d : enumerate_digraphs(3)) CHECK(complement(complement(d)) == d);
}

TEST_CASE("reverse") {
  CHECK(render(reverse(parse_digraph("2:="))) == "2:=");
  CHECK(render(reverse(parse_digraph("3:>.>"))) == "3:<.<");
  REQUIRE(enumerate_digraphs(4).size() == 218);
  for (const auto& d : enumerate_digraphs(4)) CHECK(reverse(reverse(d)) == d);
}

TEST_CASE("involutions and commutation, exhaustive to n = 4 and sampled to n = 8") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& d : oracle::all_labelled(n)) {
      CHECK(complement(complement(d)) == d);
      CHECK(reverse(reverse(d)) == d);
      CHECK(complement(reverse(d)) == reverse(complement(d)));
    }
  std::mt19937_64 rng(11);
  for (std::size_t n = 5; n <= 8; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      const Digraph d = oracle::random_digraph(rng, n);
      CHECK(complement(complement(d)) == d);
      CHECK(reverse(reverse(d)) == d);
    }
}

TEST_CASE("induced subdigraphs") {
  const Digraph path = parse_digraph("3:>.>");
  const std::vector<Vertex> first_two = {0, 1};
  const std::vector<Vertex> ends = {0, 2};
  const std::vector<Vertex> all = {0, 1, 2};
  CHECK(render(induced(path, first_two)) == "2:>");
  CHECK(render(induced(path, ends)) == "2:.");
  CHECK(induced(path, all) == path);
  const std::vector<Vertex> unordered = {2, 0};
  CHECK(induced(path, unordered) == induced(path, ends));
  const std::vector<Vertex> bad = {0, 3};
  CHECK_THROWS_AS(induced(path, bad), std::out_of_range);
  CHECK(render(delete_vertex(path, 1)) == "2:.");
}

TEST_CASE("induced composes with index selection") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Digraph d = oracle::random_digraph(rng, n);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) s.push_back(v);
    std::vector<Vertex> t_positions;
    std::vector<Vertex> t_image;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (rng() % 2) {
        t_positions.push_back(k);
        t_image.push_back(s[k]);
      }
    CHECK(induced(induced(d, s), t_positions) == induced(d, t_image));
  }
}

TEST_CASE("text format") {
  CHECK(render(parse_digraph("3:>.>")) == "3:>.>");
  CHECK(render(parse_digraph("0:")) == "0:");
  CHECK(render(parse_digraph("1:")) == "1:");
  CHECK_THROWS_AS(parse_digraph("2:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_digraph("3:>>"), std::invalid_argument);
  CHECK_THROWS_AS(parse_digraph("3>.>"), std::invalid_argument);
  CHECK_THROWS_AS(parse_digraph(":"), std::invalid_argument);
  CHECK_THROWS_AS(parse_digraph("a:"), std::invalid_argument);
  CHECK_THROWS(parse_digraph("13:" + std::string(78, '.')));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::random_digraph(rng, trial % 13);
    CHECK(parse_digraph(render(d)) == d);
    if (d.order() <= 8) CHECK(Digraph::unpack(d.order(), d.pack()) == d);
  }
}

TEST_CASE("canonical form agrees with the permutation oracle") {
  CHECK(canonical(parse_digraph("2:>")).key == canonical(parse_digraph("2:<")).key);

  std::set<std::string> keys;
  for (const auto& d : oracle::all_labelled(3)) {
    const CanonicalForm form = canonical(d);
    CHECK(form.key == oracle::canonical_key(d));
    CHECK(render(permute(d, form.witness)) == form.key);
    keys.insert(form.key);
  }
  CHECK(keys.size() == 16);

  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& d : oracle::all_labelled(n)) {
      const auto key = canonical(d).key;
      REQUIRE(key == oracle::canonical_key(d));
      CHECK(is_canonical(d) == (render(d) == key));
    }

  std::mt19937_64 rng(17);
  for (std::size_t n = 5; n <= 6; ++n)
    for (int trial = 0; trial < 150; ++trial) {
      const Digraph d = oracle::random_digraph(rng, n);
      CHECK(canonical(d).key == oracle::canonical_key(d));
    }
}

TEST_CASE("canonical form is invariant under relabelling") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& d : oracle::all_labelled(n)) {
      const auto key = canonical(d).key;
      for (const auto& p : oracle::all_permutations(n)) REQUIRE(canonical(permute(d, p)).key == key);
    }
  std::mt19937_64 rng(23);
  for (std::size_t n = 5; n <= 12; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const Digraph d = oracle::random_digraph(rng, n);
      const auto form = canonical(d);
      const Digraph shuffled = permute(d, oracle::random_permutation(rng, n));
      CHECK(canonical(shuffled).key == form.key);
      // Applying the witness to the representative changes nothing further.
      const Digraph rep = permute(d, form.witness);
      CHECK(canonical(rep).key == form.key);
      CHECK(render(rep) == form.key);
    }
}

TEST_CASE("canonical form copes with highly symmetric digraphs at n = 12") {
  const auto start = std::chrono::steady_clock::now();
  const Digraph empty(12);
  CHECK(canonical(empty).key == "12:" + std::string(66, '.'));
  CHECK(canonical(complement(empty)).key == "12:" + std::string(66, '='));
  Digraph cycle(12);
  for (Vertex v = 0; v < 12; ++v) cycle.set_state(v, (v + 1) % 12, ArcState::Fwd);
  std::mt19937_64 rng(29);
  CHECK(canonical(permute(cycle, oracle::random_permutation(rng, 12))).key == canonical(cycle).key);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
}

TEST_CASE("is_isomorphic") {
  CHECK(is_isomorphic(parse_digraph("3:>.>"), parse_digraph("3:<.<")));
  CHECK(oracle::isomorphic(parse_digraph("3:>.>"), parse_digraph("3:<.<")));
  CHECK_FALSE(is_isomorphic(parse_digraph("2:>"), parse_digraph("2:=")));
  const Digraph empty2 = parse_digraph("2:.");
  CHECK_FALSE(is_isomorphic(empty2, complement(empty2)));
  CHECK_FALSE(is_isomorphic(parse_digraph("2:."), parse_digraph("3:...")));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Digraph a = oracle::random_digraph(rng, n);
    const Digraph b = trial % 2 ? permute(a, oracle::random_permutation(rng, n)) : oracle::random_digraph(rng, n);
    CHECK(is_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("disjoint union") {
  CHECK(render(disjoint_union(parse_digraph("2:="), parse_digraph("2:="))) == "4:=....=");
}
