#include <algorithm>
#include <array>
#include <stdexcept>

#include "mpart/digraph.hpp"

// Canonical labelling by branch and bound over vertex orderings.
//
// The canonical text is the row-major upper triangle, so the first row is the
// state sequence of position 0 against every later position, and so on. A
// minimal string must list each row in non-decreasing order within the cells
// left by earlier rows; otherwise sorting that stretch would shrink the row
// without touching earlier rows. The search therefore individualizes one
// vertex per position and splits every later cell by its state towards that
// vertex, comparing each finished row against the best ordering found so far.
// Interchangeable twins in a cell are only tried once.

namespace mpart {
namespace {

constexpr std::size_t kN = Digraph::kMaxOrder;

class CanonicalSearch {
 public:
  CanonicalSearch(const Digraph& d, bool stop_on_improvement)
      : n_(d.order()), stop_on_improvement_(stop_on_improvement) {
    for (Vertex x = 0; x < n_; ++x)
      for (Vertex y = 0; y < n_; ++y)
        state_[x][y] = x == y ? 0 : static_cast<std::uint8_t>(d.state(x, y));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v) twin_[u][v] = u != v && interchangeable(u, v);
  }

  // Seed with the identity ordering so that `improved()` answers whether the
  // input itself is canonical.
  void seed_identity() {
    for (Vertex v = 0; v < n_; ++v) best_order_[v] = v;
    std::size_t k = 0;
    for (Vertex x = 0; x < n_; ++x)
      for (Vertex y = x + 1; y < n_; ++y) best_[k++] = state_[x][y];
    has_best_ = true;
  }

  void run() {
    Arrangement start{};
    for (Vertex v = 0; v < n_; ++v) {
      start.order[v] = static_cast<std::uint8_t>(v);
      start.cell_end[v] = static_cast<std::uint8_t>(n_);
    }
    if (n_ <= 1) {
      if (!has_best_) {
        best_order_ = {};
        has_best_ = true;
      }
      return;
    }
    search(0, start, false);
  }

  bool improved() const { return improved_; }

  CanonicalForm result(const Digraph& d) const {
    CanonicalForm out;
    out.witness.resize(n_);
    for (std::size_t pos = 0; pos < n_; ++pos) out.witness[best_order_[pos]] = pos;
    out.key = std::to_string(n_) + ':';
    const std::size_t pairs = d.pair_count();
    for (std::size_t k = 0; k < pairs; ++k) out.key += to_symbol(static_cast<ArcState>(best_[k]));
    return out;
  }

 private:
  struct Arrangement {
    std::array<std::uint8_t, kN> order;     // position -> vertex
    std::array<std::uint8_t, kN> cell_end;  // position -> end of its cell
  };

  bool interchangeable(Vertex u, Vertex v) const {
    const auto s = static_cast<ArcState>(state_[u][v]);
    if (s != ArcState::None && s != ArcState::Digon) return false;
    for (Vertex w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (state_[u][w] != state_[v][w]) return false;
    }
    return true;
  }

  std::size_t row_offset(std::size_t k) const { return k * n_ - k * (k + 1) / 2; }

  // Returns true when the search should stop entirely.
  bool search(std::size_t k, const Arrangement& arr, bool prefix_less) {
    if (k + 1 >= n_) {
      if (!has_best_ || prefix_less) {
        for (std::size_t pos = 0; pos < n_; ++pos) best_order_[pos] = arr.order[pos];
        std::copy(current_.begin(), current_.begin() + row_offset(n_ - 1), best_.begin());
        has_best_ = true;
        ++generation_;
        if (stop_on_improvement_ && prefix_less) {
          improved_ = true;
          return true;
        }
      }
      return false;
    }

    const std::size_t cell_end = arr.cell_end[k];
    std::array<std::uint8_t, kN> tried{};
    std::size_t tried_count = 0;
    const std::size_t offset = row_offset(k);
    const std::size_t row_len = n_ - 1 - k;

    for (std::size_t c = k; c < cell_end; ++c) {
      const std::uint8_t v = arr.order[c];
      bool redundant = false;
      for (std::size_t t = 0; t < tried_count && !redundant; ++t) redundant = twin_[tried[t]][v];
      if (redundant) continue;
      tried[tried_count++] = v;

      Arrangement next = arr;
      std::swap(next.order[k], next.order[c]);
      // Split each later cell by state towards v; keep cells contiguous.
      std::size_t pos = k + 1;
      while (pos < n_) {
        const std::size_t end = pos < cell_end ? cell_end : arr.cell_end[pos];
        auto first = next.order.begin() + static_cast<std::ptrdiff_t>(pos);
        auto last = next.order.begin() + static_cast<std::ptrdiff_t>(end);
        std::stable_sort(first, last, [&](std::uint8_t a, std::uint8_t b) {
          return state_[v][a] < state_[v][b];
        });
        std::size_t run = pos;
        while (run < end) {
          std::size_t stop = run + 1;
          while (stop < end && state_[v][next.order[stop]] == state_[v][next.order[run]]) ++stop;
          for (std::size_t q = run; q < stop; ++q) next.cell_end[q] = static_cast<std::uint8_t>(stop);
          run = stop;
        }
        pos = end;
      }

      for (std::size_t j = 0; j < row_len; ++j) current_[offset + j] = state_[v][next.order[k + 1 + j]];

      bool less = prefix_less || !has_best_;
      if (!less) {
        int cmp = 0;
        for (std::size_t j = 0; j < row_len && cmp == 0; ++j) {
          const auto a = current_[offset + j];
          const auto b = best_[offset + j];
          cmp = a < b ? -1 : (a > b ? 1 : 0);
        }
        if (cmp > 0) continue;
        less = cmp < 0;
      }

      const auto before = generation_;
      if (search(k + 1, next, less)) return true;
      if (generation_ != before) prefix_less = false;
    }
    return false;
  }

  std::size_t n_;
  bool stop_on_improvement_;
  bool has_best_ = false;
  bool improved_ = false;
  std::size_t generation_ = 0;
  std::array<std::array<std::uint8_t, kN>, kN> state_{};
  std::array<std::array<bool, kN>, kN> twin_{};
  std::array<std::uint8_t, Digraph::kMaxPairs> current_{};
  std::array<std::uint8_t, Digraph::kMaxPairs> best_{};
  std::array<std::size_t, kN> best_order_{};
};

}  // namespace

CanonicalForm canonical(const Digraph& d) {
  CanonicalSearch search(d, false);
  search.run();
  return search.result(d);
}

Digraph canonical_representative(const Digraph& d) {
  const CanonicalForm form = canonical(d);
  return permute(d, form.witness);
}

bool is_canonical(const Digraph& d) {
  CanonicalSearch search(d, true);
  search.seed_identity();
  search.run();
  return !search.improved();
}

bool is_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order()) return false;
  return canonical(a).key == canonical(b).key;
}

}  // namespace mpart
