#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace mpart {

// Literal over variable `var()`; code = 2 * var + (negated ? 1 : 0).
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(std::size_t var, bool negated) : code_(2 * var + (negated ? 1 : 0)) {}
  static constexpr Literal from_code(std::size_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  constexpr std::size_t var() const { return code_ >> 1; }
  constexpr bool negated() const { return (code_ & 1u) != 0; }
  constexpr std::size_t code() const { return code_; }
  constexpr Literal operator~() const { return from_code(code_ ^ 1u); }

  // True when this literal holds under `value` for its variable.
  constexpr bool satisfied_by(bool value) const { return value != negated(); }

  friend constexpr bool operator==(Literal, Literal) = default;
  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::size_t code_ = 0;
};

struct Clause {
  Literal a;
  Literal b;
};

struct TwoSatInstance {
  std::size_t variables = 0;
  std::vector<Clause> clauses;
};

// Implication graph on 2 * variables literal nodes: clause (a or b) yields
// ~a -> b and ~b -> a. Indexed by Literal::code().
std::vector<std::vector<std::size_t>> implication_graph(const TwoSatInstance& instance);

struct Unsatisfiable {
  // x and ~x share a strongly connected component.
  std::size_t conflicting_variable = 0;
};

using TwoSatResult = std::variant<std::vector<bool>, Unsatisfiable>;

TwoSatResult solve_2sat(const TwoSatInstance& instance);

bool satisfies(const TwoSatInstance& instance, const std::vector<bool>& assignment);

}  // namespace mpart
