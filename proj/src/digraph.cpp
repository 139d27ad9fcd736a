#include "mpart/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace mpart {

char to_symbol(ArcState s) {
  switch (s) {
    case ArcState::None: return '.';
    case ArcState::Bwd: return '<';
    case ArcState::Digon: return '=';
    case ArcState::Fwd: return '>';
  }
  return '?';
}

ArcState arc_state_from_symbol(char c) {
  switch (c) {
    case '.': return ArcState::None;
    case '<': return ArcState::Bwd;
    case '=': return ArcState::Digon;
    case '>': return ArcState::Fwd;
    default:
      throw std::invalid_argument(std::string("invalid arc symbol '") + c + "'");
  }
}

Digraph::Digraph(std::size_t order) : order_(order) {
  if (order > kMaxOrder)
    throw std::length_error("digraph order " + std::to_string(order) + " exceeds " +
                            std::to_string(kMaxOrder));
}

void Digraph::check_pair(Vertex x, Vertex y) const {
  if (x >= order_ || y >= order_)
    throw std::out_of_range("vertex out of range");
  if (x == y) throw std::invalid_argument("loops are not representable");
}

ArcState Digraph::state(Vertex x, Vertex y) const {
  check_pair(x, y);
  return x < y ? states_[index(x, y)] : flipped(states_[index(y, x)]);
}

void Digraph::set_state(Vertex x, Vertex y, ArcState s) {
  check_pair(x, y);
  if (x < y)
    states_[index(x, y)] = s;
  else
    states_[index(y, x)] = flipped(s);
}

bool Digraph::arc(Vertex x, Vertex y) const {
  const ArcState s = state(x, y);
  return s == ArcState::Fwd || s == ArcState::Digon;
}

bool Digraph::adjacent(Vertex x, Vertex y) const { return state(x, y) != ArcState::None; }

std::uint64_t Digraph::pack() const {
  if (order_ > 8) throw std::length_error("pack() supports order <= 8");
  std::uint64_t code = 0;
  for (std::size_t k = 0; k < pair_count(); ++k)
    code = (code << 2) | static_cast<std::uint64_t>(states_[k]);
  return code;
}

Digraph Digraph::unpack(std::size_t order, std::uint64_t code) {
  Digraph d(order);
  if (order > 8) throw std::length_error("unpack() supports order <= 8");
  for (std::size_t k = d.pair_count(); k-- > 0;) {
    d.states_[k] = static_cast<ArcState>(code & 3u);
    code >>= 2;
  }
  return d;
}

Digraph parse_digraph(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw std::invalid_argument("digraph text must look like <n>:<pairs>");
  std::size_t n = 0;
  const auto* first = text.data();
  const auto* last = text.data() + colon;
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("bad vertex count in digraph text");
  if (n > Digraph::kMaxOrder) throw std::length_error("digraph order exceeds 12");
  Digraph d(n);
  const std::string_view pairs = text.substr(colon + 1);
  if (pairs.size() != d.pair_count())
    throw std::invalid_argument("digraph on " + std::to_string(n) + " vertices needs " +
                                std::to_string(d.pair_count()) + " pair symbols, got " +
                                std::to_string(pairs.size()));
  for (std::size_t k = 0; k < pairs.size(); ++k) d.set_pair_state(k, arc_state_from_symbol(pairs[k]));
  return d;
}

std::string render(const Digraph& d) {
  std::string out = std::to_string(d.order());
  out += ':';
  for (ArcState s : d.pair_states()) out += to_symbol(s);
  return out;
}

Digraph complement(const Digraph& d) {
  Digraph out(d.order());
  for (std::size_t k = 0; k < d.pair_count(); ++k) {
    ArcState s = d.pair_state(k);
    switch (s) {
      case ArcState::None: s = ArcState::Digon; break;
      case ArcState::Digon: s = ArcState::None; break;
      default: s = flipped(s); break;
    }
    out.set_pair_state(k, s);
  }
  return out;
}

Digraph reverse(const Digraph& d) {
  Digraph out(d.order());
  for (std::size_t k = 0; k < d.pair_count(); ++k) out.set_pair_state(k, flipped(d.pair_state(k)));
  return out;
}

Digraph induced(const Digraph& d, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] >= d.order()) throw std::out_of_range("induced: vertex out of range");
    if (k > 0 && sorted[k] == sorted[k - 1]) throw std::invalid_argument("induced: repeated vertex");
  }
  Digraph out(sorted.size());
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b)
      out.set_state(a, b, d.state(sorted[a], sorted[b]));
  return out;
}

Digraph delete_vertex(const Digraph& d, Vertex v) {
  if (v >= d.order()) throw std::out_of_range("delete_vertex: vertex out of range");
  std::vector<Vertex> keep;
  keep.reserve(d.order() - 1);
  for (Vertex u = 0; u < d.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced(d, keep);
}

Digraph permute(const Digraph& d, std::span<const Vertex> perm) {
  if (perm.size() != d.order()) throw std::invalid_argument("permute: size mismatch");
  std::vector<bool> seen(d.order(), false);
  for (Vertex p : perm) {
    if (p >= d.order() || seen[p]) throw std::invalid_argument("permute: not a permutation");
    seen[p] = true;
  }
  Digraph out(d.order());
  for (Vertex x = 0; x < d.order(); ++x)
    for (Vertex y = x + 1; y < d.order(); ++y) out.set_state(perm[x], perm[y], d.state(x, y));
  return out;
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  Digraph out(a.order() + b.order());
  for (Vertex x = 0; x < a.order(); ++x)
    for (Vertex y = x + 1; y < a.order(); ++y) out.set_state(x, y, a.state(x, y));
  const std::size_t off = a.order();
  for (Vertex x = 0; x < b.order(); ++x)
    for (Vertex y = x + 1; y < b.order(); ++y) out.set_state(off + x, off + y, b.state(x, y));
  return out;
}

}  // namespace mpart
