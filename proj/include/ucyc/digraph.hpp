// Transition digraph of a word class: vertices are (k-1)-windows, each member
// word is an edge from its prefix window to its suffix window.

#ifndef UCYC_DIGRAPH_HPP_
#define UCYC_DIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ucyc/classes.hpp"
#include "ucyc/core.hpp"

namespace ucyc {

using VertexId = std::uint32_t;
using EdgeId = std::size_t;

struct EdgeRange {
  EdgeId first = 0;
  EdgeId last = 0;  // one past the end
  std::size_t size() const noexcept { return last - first; }
};

/// Immutable once built. Vertex ids follow vertex rank order and edge ids
/// follow edge-word rank order, so the out-edges of a vertex are a
/// contiguous, rank-sorted id range.
class TransitionDigraph {
 public:
  /// Throws std::invalid_argument when the word length is below 2 and
  /// BudgetExceeded when enumeration would exceed the budget.
  static TransitionDigraph build(const ClassSpec& spec,
                                 const EnumerationOptions& opts = {});

  const ClassSpec& spec() const noexcept { return spec_; }
  std::size_t window_length() const noexcept { return spec_.length - 1; }
  std::size_t vertex_count() const noexcept { return vertex_ranks_.size(); }
  std::size_t edge_count() const noexcept { return edge_ranks_.size(); }
  bool empty() const noexcept { return edge_ranks_.empty(); }

  Rank vertex_rank(VertexId v) const { return vertex_ranks_.at(v); }
  Word vertex_word(VertexId v) const;
  std::optional<VertexId> find_vertex(Rank r) const;
  std::optional<VertexId> find_vertex(const Word& w) const;

  Rank edge_rank(EdgeId e) const { return edge_ranks_.at(e); }
  Word edge_word(EdgeId e) const;
  VertexId edge_source(EdgeId e) const { return edge_source_.at(e); }
  VertexId edge_target(EdgeId e) const { return edge_target_.at(e); }

  EdgeRange out_edges(VertexId v) const {
    return {out_offset_.at(v), out_offset_.at(v + 1)};
  }
  std::size_t out_degree(VertexId v) const { return out_edges(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_degree_.at(v); }

  friend bool operator==(const TransitionDigraph& a,
                         const TransitionDigraph& b) {
    return a.vertex_ranks_ == b.vertex_ranks_ &&
           a.edge_ranks_ == b.edge_ranks_ &&
           a.edge_source_ == b.edge_source_ &&
           a.edge_target_ == b.edge_target_ &&
           a.out_offset_ == b.out_offset_ && a.in_degree_ == b.in_degree_;
  }

 private:
  explicit TransitionDigraph(ClassSpec spec) : spec_(std::move(spec)) {}

  ClassSpec spec_;
  std::vector<Rank> vertex_ranks_;
  std::vector<Rank> edge_ranks_;
  std::vector<VertexId> edge_source_;
  std::vector<VertexId> edge_target_;
  std::vector<EdgeId> out_offset_;
  std::vector<std::size_t> in_degree_;
};

struct DegreeWitness {
  VertexId vertex = 0;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
};

struct BalanceReport {
  bool balanced = true;
  /// First unbalanced vertex in id order; present iff !balanced.
  std::optional<DegreeWitness> witness;
  /// (in, out) -> number of vertices.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> degree_histogram;
};

struct ConnectivityReport {
  bool weakly_connected = false;
  std::size_t component_count = 0;
  /// Components ordered by their least vertex id.
  std::vector<std::size_t> component_sizes;
  /// Least vertex id of each component.
  std::vector<VertexId> sample_vertices;
};

BalanceReport check_balance(const TransitionDigraph& g);

/// Weak connectivity over stored vertices (union-find on the undirected
/// underlying graph).
ConnectivityReport check_connectivity(const TransitionDigraph& g);

/// True iff some vertex satisfying `target` is reachable from `from` along
/// a directed path of length >= 0. Throws std::out_of_range for an unknown
/// vertex.
bool reaches(const TransitionDigraph& g, VertexId from,
             const std::function<bool(VertexId)>& target);

}  // namespace ucyc

#endif  // UCYC_DIGRAPH_HPP_
