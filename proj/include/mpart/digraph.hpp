#pragma once

// Loopless digraphs stored as one arc state per unordered vertex pair.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpart {

using Vertex = std::size_t;

// State of the pair {i, j} read in the direction i -> j. The numeric values
// follow the ASCII order of the text symbols ('.' < '<' < '=' < '>') so that
// comparing state sequences and comparing rendered strings agree.
enum class ArcState : std::uint8_t {
  None = 0,   // '.'
  Bwd = 1,    // '<'  j -> i only
  Digon = 2,  // '='
  Fwd = 3,    // '>'  i -> j only
};

inline constexpr std::array<ArcState, 4> kAllArcStates = {
    ArcState::None, ArcState::Bwd, ArcState::Digon, ArcState::Fwd};

char to_symbol(ArcState s);
ArcState arc_state_from_symbol(char c);

// Same pair seen from the other endpoint.
constexpr ArcState flipped(ArcState s) {
  switch (s) {
    case ArcState::Fwd: return ArcState::Bwd;
    case ArcState::Bwd: return ArcState::Fwd;
    default: return s;
  }
}

class Digraph {
 public:
  static constexpr std::size_t kMaxOrder = 12;
  static constexpr std::size_t kMaxPairs = kMaxOrder * (kMaxOrder - 1) / 2;

  Digraph() = default;
  explicit Digraph(std::size_t order);

  std::size_t order() const { return order_; }
  std::size_t pair_count() const { return order_ * (order_ - (order_ > 0)) / 2; }

  // State of {x, y} read as x -> y; x and y may come in either order.
  ArcState state(Vertex x, Vertex y) const;
  void set_state(Vertex x, Vertex y, ArcState s);

  // Pair states in row-major upper-triangle order (0,1),(0,2),...,(1,2),...
  std::span<const ArcState> pair_states() const { return {states_.data(), pair_count()}; }
  ArcState pair_state(std::size_t index) const { return states_[index]; }
  void set_pair_state(std::size_t index, ArcState s) { states_[index] = s; }

  bool arc(Vertex x, Vertex y) const;
  bool adjacent(Vertex x, Vertex y) const;

  // 2 bits per pair; only defined for order <= 8.
  std::uint64_t pack() const;
  static Digraph unpack(std::size_t order, std::uint64_t code);

  friend bool operator==(const Digraph& a, const Digraph& b) {
    if (a.order_ != b.order_) return false;
    for (std::size_t k = 0; k < a.pair_count(); ++k)
      if (a.states_[k] != b.states_[k]) return false;
    return true;
  }

 private:
  std::size_t index(Vertex i, Vertex j) const {
    // requires i < j < order_
    return i * order_ - i * (i + 1) / 2 + (j - i - 1);
  }
  void check_pair(Vertex x, Vertex y) const;

  std::size_t order_ = 0;
  std::array<ArcState, kMaxPairs> states_{};
};

// Text form "<n>:<pairs>", e.g. "3:>.>" is the directed path 0->1->2.
Digraph parse_digraph(std::string_view text);
std::string render(const Digraph& d);

Digraph complement(const Digraph& d);
Digraph reverse(const Digraph& d);

// Subdigraph induced by `vertices`, relabelled in ascending vertex order.
Digraph induced(const Digraph& d, std::span<const Vertex> vertices);
Digraph delete_vertex(const Digraph& d, Vertex v);

// Result r satisfies r.state(perm[x], perm[y]) == d.state(x, y).
Digraph permute(const Digraph& d, std::span<const Vertex> perm);

// Disjoint union; vertices of b follow those of a.
Digraph disjoint_union(const Digraph& a, const Digraph& b);

// Representative of the isomorphism class: the vertex relabelling whose
// rendered text is lexicographically smallest.
struct CanonicalForm {
  std::string key;              // render() of the representative
  std::vector<Vertex> witness;  // permute(d, witness) is the representative
};

CanonicalForm canonical(const Digraph& d);
Digraph canonical_representative(const Digraph& d);

// True iff d is already its own canonical representative.
bool is_canonical(const Digraph& d);
bool is_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace mpart
