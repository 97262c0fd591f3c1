// Eulerian circuits of transition digraphs and their folding into U-cycles.

#ifndef UCYC_EULER_HPP_
#define UCYC_EULER_HPP_

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ucyc/classes.hpp"
#include "ucyc/core.hpp"
#include "ucyc/digraph.hpp"

namespace ucyc {

struct NonEulerian {
  enum class Reason { Unbalanced, Disconnected, Empty };
  Reason reason = Reason::Empty;
  std::optional<DegreeWitness> witness;          // Unbalanced
  std::optional<ConnectivityReport> components;  // Disconnected
};

const char* to_string(NonEulerian::Reason r);

/// Closed trail, as edge ids in traversal order.
struct Circuit {
  std::vector<EdgeId> edges;
};

using EulerOutcome = std::variant<Circuit, NonEulerian>;

/// Hierholzer's algorithm. Starts at the least-rank vertex, always takes the
/// least-rank unused out-edge, and splices each subcircuit in at the
/// earliest tour position whose vertex still has unused edges. The result
/// is a deterministic function of the graph.
EulerOutcome eulerian_circuit(const TransitionDigraph& g);

/// Cycle whose i-th letter is the first letter of the i-th edge word.
/// Throws std::invalid_argument if the sequence is empty, the words differ
/// in length, or consecutive words (including last -> first) do not overlap
/// in k-1 letters.
CyclicString fold(std::span<const Word> circuit);

struct UCycleReport {
  ClassSpec spec;
  /// Canonical (least) rotation when `canonical` is set, else the raw fold.
  CyclicString cycle;
  bool canonical = true;
  /// Edge words in raw traversal order, when requested.
  std::optional<std::vector<Word>> construction_trace;
};

struct GenerateOptions {
  EnumerationOptions enumeration;
  bool canonical = true;
  bool keep_trace = false;
};

using GenerateResult = std::variant<UCycleReport, NonEulerian>;

/// build -> balance/connectivity -> circuit -> fold. Throws what build
/// throws.
GenerateResult generate(const ClassSpec& spec,
                        const GenerateOptions& opts = {});

}  // namespace ucyc

#endif  // UCYC_EULER_HPP_
