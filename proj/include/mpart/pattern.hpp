#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mpart {

enum class Cell : std::uint8_t { Zero, One, Star };

char to_symbol(Cell c);

// m x m matrix over {0, 1, *}. Row i, column j constrains arcs from part i to
// part j; the diagonal constrains pairs inside a part.
class Pattern {
 public:
  explicit Pattern(std::size_t parts);
  Pattern(std::size_t parts, std::vector<Cell> cells);

  std::size_t parts() const { return parts_; }
  Cell at(std::size_t i, std::size_t j) const { return cells_[i * parts_ + j]; }
  void set(std::size_t i, std::size_t j, Cell c) { cells_[i * parts_ + j] = c; }

  bool has_star_diagonal() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::size_t parts_;
  std::vector<Cell> cells_;
};

// Rows separated by ',', e.g. "0*,*0". Also accepts the aliases M1..M10.
Pattern parse_pattern(std::string_view text);
std::string render(const Pattern& p);

// Swaps 0 and 1, keeps *.
Pattern pattern_complement(const Pattern& p);
Pattern pattern_transpose(const Pattern& p);
// Simultaneous row/column relabelling: result.at(perm[i], perm[j]) == p.at(i, j).
Pattern permute_parts(const Pattern& p, const std::vector<std::size_t>& perm);

// The ten representatives M1..M10, index 0 holding M1.
const std::array<Pattern, 10>& canonical_patterns();
// 1-based index into canonical_patterns().
const Pattern& canonical_pattern(int index);

// All 2x2 patterns without * on the diagonal (36 of them), in a fixed order.
std::vector<Pattern> zero_one_diagonal_patterns();

struct PatternTransform {
  bool complemented = false;
  bool transposed = false;
  std::vector<std::size_t> part_permutation;  // empty means identity

  Pattern apply(const Pattern& p) const;
  // (a.then(b)).apply(p) == b.apply(a.apply(p))
  PatternTransform then(const PatternTransform& next) const;
  PatternTransform inverse() const;
  bool is_identity() const;
  // "identity" or generator names joined by '+', e.g. "complement+swap".
  std::string describe() const;
};

// 0 means star-diagonal; 1..10 name M1..M10.
struct Classification {
  int canonical_index = 0;
  PatternTransform transform;

  bool star_diagonal() const { return canonical_index == 0; }
};

// Throws std::invalid_argument unless p is 2x2.
Classification classify_2x2(const Pattern& p);

// The eight 2x2 symmetries in tie-break order: fewer generators first, then
// complement before transpose before part swap.
const std::array<PatternTransform, 8>& pattern_symmetries_2x2();

}  // namespace mpart
