#include "ucyc/euler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ucyc {

const char* to_string(NonEulerian::Reason r) {
  switch (r) {
    case NonEulerian::Reason::Unbalanced:
      return "unbalanced";
    case NonEulerian::Reason::Disconnected:
      return "disconnected";
    case NonEulerian::Reason::Empty:
      return "empty";
  }
  return "?";
}

namespace {

constexpr std::size_t kNil = static_cast<std::size_t>(-1);

/// Tour as a singly linked list of edge ids, so splicing is O(1).
struct Tour {
  std::vector<EdgeId> edge;
  std::vector<std::size_t> next;

  std::size_t push(EdgeId e) {
    edge.push_back(e);
    next.push_back(kNil);
    return edge.size() - 1;
  }
};

}  // namespace

EulerOutcome eulerian_circuit(const TransitionDigraph& g) {
  if (g.empty()) {
    return NonEulerian{NonEulerian::Reason::Empty, std::nullopt, std::nullopt};
  }
  if (auto balance = check_balance(g); !balance.balanced) {
    return NonEulerian{NonEulerian::Reason::Unbalanced, balance.witness,
                       std::nullopt};
  }
  if (auto conn = check_connectivity(g); !conn.weakly_connected) {
    return NonEulerian{NonEulerian::Reason::Disconnected, std::nullopt,
                       std::move(conn)};
  }

  // Out-edges are consumed in rank order, so a cursor per vertex suffices.
  std::vector<EdgeId> cursor(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    cursor[v] = g.out_edges(v).first;
  }
  auto has_unused = [&](VertexId v) { return cursor[v] < g.out_edges(v).last; };

  Tour tour;
  tour.edge.reserve(g.edge_count());
  tour.next.reserve(g.edge_count());

  // Greedy closed walk from v; returns (first node, last node).
  auto walk = [&](VertexId v) {
    const VertexId start = v;
    std::size_t head = kNil, tail = kNil;
    while (has_unused(v)) {
      const EdgeId e = cursor[v]++;
      const std::size_t node = tour.push(e);
      if (tail == kNil) {
        head = node;
      } else {
        tour.next[tail] = node;
      }
      tail = node;
      v = g.edge_target(e);
    }
    if (v != start) {
      throw std::logic_error("walk did not close in a balanced digraph");
    }
    return std::pair{head, tail};
  };

  const std::size_t head = walk(0).first;
  for (std::size_t node = head; node != kNil; node = tour.next[node]) {
    const VertexId at = g.edge_target(tour.edge[node]);
    if (has_unused(at)) {
      const auto [sub_head, sub_tail] = walk(at);
      tour.next[sub_tail] = tour.next[node];
      tour.next[node] = sub_head;
    }
  }

  Circuit circuit;
  circuit.edges.reserve(g.edge_count());
  for (std::size_t node = head; node != kNil; node = tour.next[node]) {
    circuit.edges.push_back(tour.edge[node]);
  }
  if (circuit.edges.size() != g.edge_count()) {
    throw std::logic_error("circuit missed edges in a connected digraph");
  }
  return circuit;
}

CyclicString fold(std::span<const Word> circuit) {
  if (circuit.empty()) {
    throw std::invalid_argument("cannot fold an empty circuit");
  }
  const std::size_t k = circuit.front().size();
  if (k == 0) {
    throw std::invalid_argument("cannot fold empty words");
  }
  std::vector<Letter> letters;
  letters.reserve(circuit.size());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Word& a = circuit[i];
    const Word& b = circuit[(i + 1) % circuit.size()];
    if (a.size() != k || b.size() != k) {
      throw std::invalid_argument("circuit words differ in length");
    }
    if (!std::equal(a.begin() + 1, a.end(), b.begin())) {
      throw std::invalid_argument("circuit overlap violated after position " +
                                  std::to_string(i));
    }
    letters.push_back(a[0]);
  }
  return CyclicString(std::move(letters));
}

GenerateResult generate(const ClassSpec& spec, const GenerateOptions& opts) {
  const auto g = TransitionDigraph::build(spec, opts.enumeration);
  auto outcome = eulerian_circuit(g);
  if (auto* failure = std::get_if<NonEulerian>(&outcome)) {
    return std::move(*failure);
  }
  const auto& circuit = std::get<Circuit>(outcome);
  std::vector<Word> words;
  words.reserve(circuit.edges.size());
  for (EdgeId e : circuit.edges) {
    words.push_back(g.edge_word(e));
  }
  UCycleReport report{spec, {}, opts.canonical, std::nullopt};
  report.cycle = opts.canonical ? fold(words).canonical() : fold(words);
  if (opts.keep_trace) {
    report.construction_trace = std::move(words);
  }
  return report;
}

}  // namespace ucyc
