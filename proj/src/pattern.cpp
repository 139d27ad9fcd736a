#include "mpart/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpart {

char to_symbol(Cell c) {
  switch (c) {
    case Cell::Zero: return '0';
    case Cell::One: return '1';
    case Cell::Star: return '*';
  }
  return '?';
}

Pattern::Pattern(std::size_t parts) : parts_(parts), cells_(parts * parts, Cell::Star) {
  if (parts == 0) throw std::invalid_argument("pattern needs at least one part");
}

Pattern::Pattern(std::size_t parts, std::vector<Cell> cells) : parts_(parts), cells_(std::move(cells)) {
  if (parts == 0) throw std::invalid_argument("pattern needs at least one part");
  if (cells_.size() != parts * parts) throw std::invalid_argument("pattern is not square");
}

bool Pattern::has_star_diagonal() const {
  for (std::size_t i = 0; i < parts_; ++i)
    if (at(i, i) == Cell::Star) return true;
  return false;
}

namespace {

constexpr std::array<std::string_view, 10> kCanonicalText = {
    "0*,*0", "00,*0", "01,*0", "00,10", "01,10",
    "00,00", "0*,*1", "00,*1", "01,01", "00,01",
};

Pattern parse_matrix(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    rows.push_back(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const std::size_t m = rows.size();
  std::vector<Cell> cells;
  cells.reserve(m * m);
  for (auto row : rows) {
    if (row.size() != m)
      throw std::invalid_argument("pattern '" + std::string(text) + "' is not square");
    for (char c : row) {
      switch (c) {
        case '0': cells.push_back(Cell::Zero); break;
        case '1': cells.push_back(Cell::One); break;
        case '*': cells.push_back(Cell::Star); break;
        default:
          throw std::invalid_argument(std::string("invalid pattern symbol '") + c + "'");
      }
    }
  }
  return Pattern(m, std::move(cells));
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  if (text.size() >= 2 && (text[0] == 'M' || text[0] == 'm')) {
    const std::string_view digits = text.substr(1);
    int index = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw std::invalid_argument("unknown pattern alias '" + std::string(text) + "'");
      index = index * 10 + (c - '0');
      if (index > 10) break;
    }
    if (index < 1 || index > 10 || digits.size() > 2 || digits[0] == '0')
      throw std::invalid_argument("unknown pattern alias '" + std::string(text) + "'");
    return canonical_pattern(index);
  }
  if (text.empty()) throw std::invalid_argument("empty pattern");
  return parse_matrix(text);
}

std::string render(const Pattern& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts(); ++i) {
    if (i > 0) out += ',';
    for (std::size_t j = 0; j < p.parts(); ++j) out += to_symbol(p.at(i, j));
  }
  return out;
}

Pattern pattern_complement(const Pattern& p) {
  Pattern out(p.parts());
  for (std::size_t i = 0; i < p.parts(); ++i)
    for (std::size_t j = 0; j < p.parts(); ++j) {
      const Cell c = p.at(i, j);
      out.set(i, j, c == Cell::Zero ? Cell::One : c == Cell::One ? Cell::Zero : Cell::Star);
    }
  return out;
}

Pattern pattern_transpose(const Pattern& p) {
  Pattern out(p.parts());
  for (std::size_t i = 0; i < p.parts(); ++i)
    for (std::size_t j = 0; j < p.parts(); ++j) out.set(j, i, p.at(i, j));
  return out;
}

Pattern permute_parts(const Pattern& p, const std::vector<std::size_t>& perm) {
  if (perm.size() != p.parts()) throw std::invalid_argument("part permutation has wrong size");
  std::vector<bool> seen(p.parts(), false);
  for (auto q : perm) {
    if (q >= p.parts() || seen[q]) throw std::invalid_argument("not a part permutation");
    seen[q] = true;
  }
  Pattern out(p.parts());
  for (std::size_t i = 0; i < p.parts(); ++i)
    for (std::size_t j = 0; j < p.parts(); ++j) out.set(perm[i], perm[j], p.at(i, j));
  return out;
}

const std::array<Pattern, 10>& canonical_patterns() {
  static const std::array<Pattern, 10> patterns = [] {
    auto make = [](std::size_t i) { return parse_matrix(kCanonicalText[i]); };
    return std::array<Pattern, 10>{make(0), make(1), make(2), make(3), make(4),
                                   make(5), make(6), make(7), make(8), make(9)};
  }();
  return patterns;
}

const Pattern& canonical_pattern(int index) {
  if (index < 1 || index > 10) throw std::out_of_range("canonical pattern index must be 1..10");
  return canonical_patterns()[static_cast<std::size_t>(index - 1)];
}

std::vector<Pattern> zero_one_diagonal_patterns() {
  constexpr std::array<Cell, 2> diag = {Cell::Zero, Cell::One};
  constexpr std::array<Cell, 3> any = {Cell::Zero, Cell::One, Cell::Star};
  std::vector<Pattern> out;
  for (Cell a : diag)
    for (Cell d : diag)
      for (Cell b : any)
        for (Cell c : any) out.emplace_back(2, std::vector<Cell>{a, b, c, d});
  return out;
}

Pattern PatternTransform::apply(const Pattern& p) const {
  Pattern out = complemented ? pattern_complement(p) : p;
  if (transposed) out = pattern_transpose(out);
  if (!part_permutation.empty()) out = permute_parts(out, part_permutation);
  return out;
}

PatternTransform PatternTransform::then(const PatternTransform& next) const {
  PatternTransform out;
  out.complemented = complemented != next.complemented;
  out.transposed = transposed != next.transposed;
  if (part_permutation.empty()) {
    out.part_permutation = next.part_permutation;
  } else if (next.part_permutation.empty()) {
    out.part_permutation = part_permutation;
  } else {
    if (part_permutation.size() != next.part_permutation.size())
      throw std::invalid_argument("cannot compose part permutations of different sizes");
    out.part_permutation.resize(part_permutation.size());
    for (std::size_t i = 0; i < part_permutation.size(); ++i)
      out.part_permutation[i] = next.part_permutation[part_permutation[i]];
  }
  if (!out.part_permutation.empty()) {
    bool identity = true;
    for (std::size_t i = 0; i < out.part_permutation.size(); ++i) identity &= out.part_permutation[i] == i;
    if (identity) out.part_permutation.clear();
  }
  return out;
}

PatternTransform PatternTransform::inverse() const {
  PatternTransform out = *this;
  if (!part_permutation.empty()) {
    for (std::size_t i = 0; i < part_permutation.size(); ++i) out.part_permutation[part_permutation[i]] = i;
  }
  return out;
}

bool PatternTransform::is_identity() const {
  if (complemented || transposed) return false;
  for (std::size_t i = 0; i < part_permutation.size(); ++i)
    if (part_permutation[i] != i) return false;
  return true;
}

std::string PatternTransform::describe() const {
  std::string out;
  auto add = [&](std::string_view name) {
    if (!out.empty()) out += '+';
    out += name;
  };
  if (complemented) add("complement");
  if (transposed) add("transpose");
  if (!is_identity() && !part_permutation.empty()) {
    bool moved = false;
    for (std::size_t i = 0; i < part_permutation.size(); ++i) moved |= part_permutation[i] != i;
    if (moved) add("swap");
  }
  return out.empty() ? "identity" : out;
}

const std::array<PatternTransform, 8>& pattern_symmetries_2x2() {
  static const std::array<PatternTransform, 8> group = [] {
    const std::vector<std::size_t> swap = {1, 0};
    return std::array<PatternTransform, 8>{
        PatternTransform{false, false, {}},  PatternTransform{true, false, {}},
        PatternTransform{false, true, {}},   PatternTransform{false, false, swap},
        PatternTransform{true, true, {}},    PatternTransform{true, false, swap},
        PatternTransform{false, true, swap}, PatternTransform{true, true, swap},
    };
  }();
  return group;
}

Classification classify_2x2(const Pattern& p) {
  if (p.parts() != 2) throw std::invalid_argument("classify_2x2 needs a 2x2 pattern");
  if (p.has_star_diagonal()) return Classification{};
  const auto& targets = canonical_patterns();
  for (const PatternTransform& t : pattern_symmetries_2x2()) {
    const Pattern image = t.apply(p);
    const auto it = std::find(targets.begin(), targets.end(), image);
    if (it != targets.end())
      return Classification{static_cast<int>(it - targets.begin()) + 1, t};
  }
  throw std::logic_error("pattern " + render(p) + " reaches no canonical representative");
}

}  // namespace mpart
