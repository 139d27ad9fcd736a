#include "mpart/two_sat.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mpart {

std::vector<std::vector<std::size_t>> implication_graph(const TwoSatInstance& instance) {
  std::vector<std::vector<std::size_t>> graph(2 * instance.variables);
  for (const Clause& c : instance.clauses) {
    if (c.a.var() >= instance.variables || c.b.var() >= instance.variables)
      throw std::out_of_range("clause mentions unknown variable");
    graph[(~c.a).code()].push_back(c.b.code());
    graph[(~c.b).code()].push_back(c.a.code());
  }
  return graph;
}

namespace {

// Iterative Tarjan. Components are numbered in the order they are closed,
// which is a reverse topological order of the condensation.
std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<std::size_t>>& graph) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = graph.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // node, next edge
  std::size_t counter = 0;
  std::size_t components = 0;

  // Negative literals are tried first as roots, so unconstrained variables
  // come out false.
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t root = r ^ 1u;
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [node, edge] = frames.back();
      if (edge < graph[node].size()) {
        const std::size_t next = graph[node][edge++];
        if (index[next] == kUnvisited) {
          index[next] = low[next] = counter++;
          stack.push_back(next);
          on_stack[next] = true;
          frames.emplace_back(next, 0);
        } else if (on_stack[next]) {
          low[node] = std::min(low[node], index[next]);
        }
        continue;
      }
      const std::size_t done = node;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }
  return component;
}

}  // namespace

TwoSatResult solve_2sat(const TwoSatInstance& instance) {
  const auto graph = implication_graph(instance);
  const auto component = strongly_connected_components(graph);
  std::vector<bool> assignment(instance.variables, false);
  for (std::size_t v = 0; v < instance.variables; ++v) {
    const std::size_t pos = component[Literal(v, false).code()];
    const std::size_t neg = component[Literal(v, true).code()];
    if (pos == neg) return Unsatisfiable{v};
    // The literal whose component closes first lies later in topological order.
    assignment[v] = pos < neg;
  }
  if (!satisfies(instance, assignment))
    throw std::logic_error("2-SAT assignment failed verification");
  return assignment;
}

bool satisfies(const TwoSatInstance& instance, const std::vector<bool>& assignment) {
  if (assignment.size() != instance.variables) return false;
  return std::all_of(instance.clauses.begin(), instance.clauses.end(), [&](const Clause& c) {
    return c.a.satisfied_by(assignment[c.a.var()]) || c.b.satisfied_by(assignment[c.b.var()]);
  });
}

}  // namespace mpart
