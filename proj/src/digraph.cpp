#include "ucyc/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ucyc {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

TransitionDigraph TransitionDigraph::build(const ClassSpec& spec,
                                          const EnumerationOptions& opts) {
  if (spec.length < 2) {
    throw std::invalid_argument(
        "transition digraph needs word length >= 2, got " +
        std::to_string(spec.length));
  }
  TransitionDigraph g(spec);
  g.edge_ranks_ = member_ranks(spec, opts);

  const Rank n = spec.alphabet.size();
  const Rank window_space = *checked_power(n, spec.length - 1);

  g.vertex_ranks_.reserve(2 * g.edge_ranks_.size());
  for (Rank r : g.edge_ranks_) {
    g.vertex_ranks_.push_back(r / n);
    g.vertex_ranks_.push_back(r % window_space);
  }
  std::sort(g.vertex_ranks_.begin(), g.vertex_ranks_.end());
  g.vertex_ranks_.erase(
      std::unique(g.vertex_ranks_.begin(), g.vertex_ranks_.end()),
      g.vertex_ranks_.end());
  g.vertex_ranks_.shrink_to_fit();
  if (g.vertex_ranks_.size() > UINT32_MAX) {
    throw std::length_error("too many vertices");
  }

  const std::size_t vcount = g.vertex_ranks_.size();
  const std::size_t ecount = g.edge_ranks_.size();
  g.edge_source_.resize(ecount);
  g.edge_target_.resize(ecount);
  g.out_offset_.assign(vcount + 1, 0);
  g.in_degree_.assign(vcount, 0);

  auto id_of = [&](Rank r) {
    auto it = std::lower_bound(g.vertex_ranks_.begin(), g.vertex_ranks_.end(), r);
    return static_cast<VertexId>(it - g.vertex_ranks_.begin());
  };
  for (EdgeId e = 0; e < ecount; ++e) {
    const VertexId s = id_of(g.edge_ranks_[e] / n);
    const VertexId t = id_of(g.edge_ranks_[e] % window_space);
    g.edge_source_[e] = s;
    g.edge_target_[e] = t;
    ++g.out_offset_[s + 1];
    ++g.in_degree_[t];
  }
  // Edge ranks are sorted and the prefix is rank / n, so sources are
  // non-decreasing and the prefix sums give contiguous out-ranges.
  std::partial_sum(g.out_offset_.begin(), g.out_offset_.end(),
                   g.out_offset_.begin());
  return g;
}

Word TransitionDigraph::vertex_word(VertexId v) const {
  return unrank(vertex_rank(v), window_length(), spec_.alphabet);
}

Word TransitionDigraph::edge_word(EdgeId e) const {
  return unrank(edge_rank(e), spec_.length, spec_.alphabet);
}

std::optional<VertexId> TransitionDigraph::find_vertex(Rank r) const {
  auto it = std::lower_bound(vertex_ranks_.begin(), vertex_ranks_.end(), r);
  if (it == vertex_ranks_.end() || *it != r) {
    return std::nullopt;
  }
  return static_cast<VertexId>(it - vertex_ranks_.begin());
}

std::optional<VertexId> TransitionDigraph::find_vertex(const Word& w) const {
  if (w.size() != window_length()) {
    return std::nullopt;
  }
  return find_vertex(rank(w, spec_.alphabet));
}

BalanceReport check_balance(const TransitionDigraph& g) {
  BalanceReport report;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t in = g.in_degree(v);
    const std::size_t out = g.out_degree(v);
    ++report.degree_histogram[{in, out}];
    if (in != out && report.balanced) {
      report.balanced = false;
      report.witness = DegreeWitness{v, in, out};
    }
  }
  return report;
}

ConnectivityReport check_connectivity(const TransitionDigraph& g) {
  DisjointSets sets(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    sets.unite(g.edge_source(e), g.edge_target(e));
  }
  ConnectivityReport report;
  std::map<std::size_t, std::size_t> slot_of_root;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t root = sets.find(v);
    auto [it, inserted] =
        slot_of_root.try_emplace(root, report.component_sizes.size());
    if (inserted) {
      report.component_sizes.push_back(0);
      report.sample_vertices.push_back(v);
    }
    ++report.component_sizes[it->second];
  }
  report.component_count = report.component_sizes.size();
  report.weakly_connected = report.component_count == 1;
  return report;
}

bool reaches(const TransitionDigraph& g, VertexId from,
             const std::function<bool(VertexId)>& target) {
  if (from >= g.vertex_count()) {
    throw std::out_of_range("unknown vertex " + std::to_string(from));
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (target(v)) {
      return true;
    }
    const EdgeRange out = g.out_edges(v);
    for (EdgeId e = out.first; e < out.last; ++e) {
      const VertexId t = g.edge_target(e);
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return false;
}

}  // namespace ucyc
