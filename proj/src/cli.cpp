#include "ucyc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "ucyc/classes.hpp"
#include "ucyc/digraph.hpp"
#include "ucyc/euler.hpp"
#include "ucyc/lattice.hpp"
#include "ucyc/verify.hpp"

namespace ucyc::cli {

namespace {

using json = nlohmann::ordered_json;

/// Argument problems detected after CLI11 parsing; mapped to exit 64.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecFlags {
  std::string class_name;
  std::optional<std::size_t> alphabet_size;
  std::string alphabet;
  bool cyclic = false;
  std::string categories;
  std::size_t length = 0;
  std::size_t lipschitz_c = 1;
  std::size_t aug_a = 1;
  std::size_t aug_b = 2;
  std::size_t lattice_dim = 2;
  std::size_t lattice_radius = 0;
  std::optional<Rank> budget;
  bool json = false;
};

const std::vector<std::string> kClassNames = {
    "monotone", "lipschitz",  "cyclic-categories", "augmented-onto",
    "lattice",  "all-words",  "injective",         "onto",
    "near-balanced", "equitable"};

void add_spec_flags(CLI::App* cmd, SpecFlags& f, bool with_length = true) {
  cmd->add_option("--class", f.class_name, "Word class")
      ->required()
      ->check(CLI::IsMember(kClassNames));
  cmd->add_option("--alphabet-size", f.alphabet_size,
                  "Alphabet of N auto-named symbols");
  cmd->add_option("--alphabet", f.alphabet,
                  "Comma-separated symbols, in order");
  cmd->add_flag("--cyclic", f.cyclic, "Letter distance wraps around");
  cmd->add_option("--categories", f.categories,
                  "Pipe-separated symbol groups, e.g. \"AEI|BCD\"");
  if (with_length) {
    cmd->add_option("--length", f.length, "Word length k")->required();
  }
  cmd->add_option("--lipschitz-c", f.lipschitz_c, "Lipschitz constant c");
  cmd->add_option("--aug-a", f.aug_a, "Minimum occurrences per letter");
  cmd->add_option("--aug-b", f.aug_b, "Maximum occurrences per letter");
  cmd->add_option("--lattice-dim", f.lattice_dim, "Lattice dimension m");
  cmd->add_option("--lattice-radius", f.lattice_radius,
                  "Maximum l1 distance of the endpoint");
  cmd->add_option("--budget", f.budget,
                  "Maximum candidate words to filter (default 10^8, or "
                  "UCYC_BUDGET)");
  cmd->add_flag("--json", f.json, "JSON output");
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

/// Auto-named alphabets of at most 10 symbols also accept the digits
/// 0..n-1 as letter indices, so "11101000" reads over --alphabet-size 2.
std::vector<Letter> parse_text(const Alphabet& alphabet,
                               const std::string& text, bool digit_aliases) {
  if (digit_aliases && alphabet.size() <= 10 &&
      text.find_first_not_of("0123456789, \t\r\n") == std::string::npos) {
    std::vector<Letter> out;
    for (char c : text) {
      if (c >= '0' && c <= '9') {
        const auto l = static_cast<Letter>(c - '0');
        if (l >= alphabet.size()) {
          throw std::invalid_argument(std::string("digit '") + c +
                                      "' outside alphabet");
        }
        out.push_back(l);
      }
    }
    return out;
  }
  return parse_letters(alphabet, text);
}

Alphabet::Categories parse_categories(const Alphabet& alphabet,
                                      const std::string& text,
                                      bool digit_aliases) {
  Alphabet::Categories cats;
  for (const auto& group : split(text, '|')) {
    std::vector<Letter> letters;
    try {
      letters = parse_text(alphabet, group, digit_aliases);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--categories: ") + e.what());
    }
    cats.push_back(std::move(letters));
  }
  return cats;
}

Alphabet make_alphabet(const SpecFlags& f) {
  std::optional<Alphabet> alphabet;
  if (!f.alphabet.empty()) {
    alphabet.emplace(split(f.alphabet, ','), f.cyclic);
  } else if (f.alphabet_size) {
    if (*f.alphabet_size == 0 || *f.alphabet_size > kMaxAlphabetSize) {
      throw UsageError("--alphabet-size must be in 1.." +
                       std::to_string(kMaxAlphabetSize));
    }
    alphabet = Alphabet::of_size(*f.alphabet_size, f.cyclic);
  } else {
    throw UsageError("one of --alphabet or --alphabet-size is required");
  }
  if (!f.categories.empty()) {
    alphabet = alphabet->with_categories(
        parse_categories(*alphabet, f.categories, f.alphabet.empty()));
  }
  return *alphabet;
}

ClassSpec make_spec(const SpecFlags& f) {
  if (f.class_name == "lattice") {
    return lattice_spec(f.lattice_dim, f.lattice_radius, f.length);
  }
  Alphabet alphabet = make_alphabet(f);
  ClassKind kind;
  const std::string& c = f.class_name;
  if (c == "monotone") {
    kind = kind::Monotone{};
  } else if (c == "lipschitz") {
    kind = kind::Lipschitz{f.lipschitz_c};
  } else if (c == "cyclic-categories") {
    kind = kind::CyclicCategories{};
  } else if (c == "augmented-onto") {
    kind = kind::AugmentedOnto{f.aug_a, f.aug_b};
  } else if (c == "all-words") {
    kind = kind::AllWords{};
  } else if (c == "injective") {
    kind = kind::Injective{};
  } else if (c == "onto") {
    kind = kind::Onto{};
  } else if (c == "near-balanced") {
    kind = kind::NearBalancedBinary{};
  } else if (c == "equitable") {
    kind = kind::Equitable{};
  } else {
    throw UsageError("unknown class " + c);
  }
  return ClassSpec{std::move(alphabet), f.length, kind};
}

/// Validates the spec, printing warnings. Throws UsageError if invalid.
ClassSpec checked_spec(const SpecFlags& f, std::ostream& err) {
  try {
    ClassSpec spec = make_spec(f);
    for (const auto& w : validate(spec)) {
      err << "warning: " << w << "\n";
    }
    return spec;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

bool auto_named(const SpecFlags& f) {
  return f.alphabet.empty();
}

EnumerationOptions enumeration_options(const SpecFlags& f) {
  EnumerationOptions opts;
  if (f.budget) {
    opts.budget = *f.budget;
  }
  return opts;
}

json spec_json(const ClassSpec& spec) {
  json j;
  j["class"] = class_name(spec.kind);
  j["n"] = spec.alphabet.size();
  j["k"] = spec.length;
  std::visit(
      [&](const auto& kind) {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, kind::Lipschitz>) {
          j["c"] = kind.c;
        } else if constexpr (std::is_same_v<K, kind::AugmentedOnto>) {
          j["a"] = kind.a;
          j["b"] = kind.b;
        } else if constexpr (std::is_same_v<K, kind::LatticePath>) {
          j["dimension"] = kind.dimension;
          j["radius"] = kind.radius;
        } else if constexpr (std::is_same_v<K, kind::CyclicCategories>) {
          j["categories"] = spec.alphabet.category_count();
        }
      },
      spec.kind);
  return j;
}

json claim_json(const ExistenceClaim& claim) {
  json j;
  j["verdict"] = to_string(claim.verdict);
  j["basis"] = claim.basis.empty() ? json(nullptr) : json(claim.basis);
  return j;
}

json non_eulerian_json(const NonEulerian& ne, const TransitionDigraph* g) {
  json j;
  j["reason"] = to_string(ne.reason);
  if (ne.witness) {
    if (g) {
      j["vertex"] = format_letters(g->spec().alphabet,
                                   g->vertex_word(ne.witness->vertex).letters());
    }
    j["in_degree"] = ne.witness->in_degree;
    j["out_degree"] = ne.witness->out_degree;
  }
  if (ne.components) {
    j["component_count"] = ne.components->component_count;
    j["component_sizes"] = ne.components->component_sizes;
  }
  return j;
}

json stats_json(const TransitionDigraph& g) {
  const auto balance = check_balance(g);
  const auto conn = check_connectivity(g);
  json j;
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  j["balanced"] = balance.balanced;
  json hist = json::array();
  for (const auto& [deg, vertices] : balance.degree_histogram) {
    hist.push_back({{"in", deg.first}, {"out", deg.second},
                    {"vertices", vertices}});
  }
  j["degree_histogram"] = std::move(hist);
  j["component_count"] = conn.component_count;
  j["component_sizes"] = conn.component_sizes;
  return j;
}

json report_json(const VerificationReport& r, const Alphabet& alphabet) {
  json j;
  j["ok"] = r.ok;
  j["length_ok"] = r.length_ok;
  j["all_windows_valid"] = r.all_windows_valid;
  j["all_distinct"] = r.all_distinct;
  j["coverage_complete"] = r.coverage_complete;
  j["cycle_length"] = r.cycle_length;
  j["expected_length"] = r.expected_length;
  j["failure_count"] = r.failure_count;
  json failures = json::array();
  for (const auto& f : r.failures) {
    json fj;
    fj["position"] = f.position ? json(*f.position) : json(nullptr);
    std::string word;
    for (std::size_t i = 0; i < f.window.size(); ++i) {
      // Windows from corrupt input may hold letters outside the alphabet.
      if (f.window[i] < alphabet.size()) {
        if (!alphabet.single_char_symbols() && i > 0) {
          word += ',';
        }
        word += alphabet.symbol(f.window[i]);
      } else {
        word += "?";
      }
    }
    fj["window"] = word;
    fj["kind"] = to_string(f.kind);
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  return j;
}

int cmd_gen(const SpecFlags& f, bool trace, std::ostream& out,
            std::ostream& err) {
  const ClassSpec spec = checked_spec(f, err);
  if (spec.length < 2) {
    throw UsageError("gen needs --length >= 2");
  }
  GenerateOptions opts;
  opts.enumeration = enumeration_options(f);
  opts.keep_trace = trace;
  auto result = generate(spec, opts);
  if (auto* ne = std::get_if<NonEulerian>(&result)) {
    const auto g = TransitionDigraph::build(spec, opts.enumeration);
    err << non_eulerian_json(*ne, &g).dump() << "\n";
    return kExitNonEulerian;
  }
  const auto& report = std::get<UCycleReport>(result);
  const std::string text = format_letters(spec.alphabet, report.cycle.letters());
  if (f.json) {
    json j = spec_json(spec);
    j["length"] = report.cycle.size();
    j["cycle"] = text;
    if (report.construction_trace) {
      json t = json::array();
      for (const auto& w : *report.construction_trace) {
        t.push_back(format_letters(spec.alphabet, w.letters()));
      }
      j["trace"] = std::move(t);
    }
    out << j.dump() << "\n";
  } else {
    out << text << "\n";
    if (report.construction_trace) {
      for (const auto& w : *report.construction_trace) {
        out << format_letters(spec.alphabet, w.letters()) << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_verify(const SpecFlags& f, const std::string& cycle_text,
               const std::string& cycle_file, std::ostream& out,
               std::ostream& err) {
  const ClassSpec spec = checked_spec(f, err);
  std::string text = cycle_text;
  if (!cycle_file.empty()) {
    std::ifstream in(cycle_file);
    if (!in) {
      throw UsageError("cannot read " + cycle_file);
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  std::vector<Letter> letters;
  try {
    const bool aliases =
        auto_named(f) && f.class_name != "lattice";
    letters = parse_text(spec.alphabet, text, aliases);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cycle: ") + e.what());
  }
  VerifyOptions opts;
  opts.enumeration = enumeration_options(f);
  const auto report = verify(CyclicString(std::move(letters)), spec, opts);
  json j = spec_json(spec);
  j.update(report_json(report, spec.alphabet));
  out << j.dump() << "\n";
  return report.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_stats(const SpecFlags& f, std::ostream& out, std::ostream& err) {
  const ClassSpec spec = checked_spec(f, err);
  if (spec.length < 2) {
    throw UsageError("stats needs --length >= 2");
  }
  const auto g = TransitionDigraph::build(spec, enumeration_options(f));
  json j = spec_json(spec);
  j.update(stats_json(g));
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_count(const SpecFlags& f, std::ostream& out, std::ostream& err) {
  const ClassSpec spec = checked_spec(f, err);
  const auto summary = summarize(spec, enumeration_options(f));
  if (f.json) {
    json j = spec_json(spec);
    j["count"] = summary.count;
    j["claim"] = claim_json(summary.claim);
    out << j.dump() << "\n";
  } else {
    out << summary.count << "\n";
  }
  return kExitOk;
}

int cmd_list(const SpecFlags& f, std::ostream& out, std::ostream& err) {
  const ClassSpec spec = checked_spec(f, err);
  const auto words = enumerate(spec, enumeration_options(f));
  if (f.json) {
    json j = spec_json(spec);
    json arr = json::array();
    for (const auto& w : words) {
      arr.push_back(format_letters(spec.alphabet, w.letters()));
    }
    j["words"] = std::move(arr);
    out << j.dump() << "\n";
  } else {
    for (const auto& w : words) {
      out << format_letters(spec.alphabet, w.letters()) << "\n";
    }
  }
  return kExitOk;
}

/// "a..b", "a,b,c" or a single value.
std::vector<std::size_t> parse_range(const std::string& text,
                                     const char* flag) {
  std::vector<std::size_t> out;
  try {
    if (auto dots = text.find(".."); dots != std::string::npos) {
      const std::size_t lo = std::stoul(text.substr(0, dots));
      const std::size_t hi = std::stoul(text.substr(dots + 2));
      if (lo > hi) {
        throw UsageError(std::string(flag) + ": empty range " + text);
      }
      for (std::size_t v = lo; v <= hi; ++v) {
        out.push_back(v);
      }
    } else {
      for (const auto& part : split(text, ',')) {
        out.push_back(std::stoul(part));
      }
    }
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + ": cannot parse '" + text + "'");
  }
  return out;
}

struct SweepFlags {
  std::string alphabet_sizes;
  std::string lengths;
  std::string radii;
};

json sweep_point(const ClassSpec& spec, const EnumerationOptions& enumeration) {
  json j = spec_json(spec);
  const ExistenceClaim claim = existence_claim(spec);
  try {
    validate(spec);
    GenerateOptions opts;
    opts.enumeration = enumeration;
    auto result = generate(spec, opts);
    std::optional<bool> exists;
    if (auto* report = std::get_if<UCycleReport>(&result)) {
      VerifyOptions vopts;
      vopts.enumeration = enumeration;
      const bool ok = verify(report->cycle, spec, vopts).ok;
      j["count"] = report->cycle.size();
      j["verified"] = ok;
      exists = ok;
    } else {
      const auto& ne = std::get<NonEulerian>(result);
      j["reason"] = to_string(ne.reason);
      exists = false;
    }
    j["exists_empirically"] = *exists;
    j["claimed"] = claim_json(claim);
    using V = ExistenceClaim::Verdict;
    if (claim.verdict == V::Unstated) {
      j["agree"] = nullptr;
    } else {
      j["agree"] = (claim.verdict == V::ClaimedExists) == *exists;
    }
  } catch (const std::exception& e) {
    j["error"] = e.what();
    j["claimed"] = claim_json(claim);
    j["agree"] = nullptr;
  }
  return j;
}

int cmd_sweep(const SpecFlags& f, const SweepFlags& s, std::ostream& out) {
  const auto lengths = parse_range(s.lengths, "--lengths");
  std::vector<std::size_t> sizes{0};
  if (f.class_name != "lattice" && f.alphabet.empty()) {
    if (s.alphabet_sizes.empty()) {
      if (!f.alphabet_size) {
        throw UsageError("sweep needs --alphabet-sizes, --alphabet-size or "
                         "--alphabet");
      }
      sizes = {*f.alphabet_size};
    } else {
      sizes = parse_range(s.alphabet_sizes, "--alphabet-sizes");
    }
  }
  std::vector<std::size_t> radii{f.lattice_radius};
  if (f.class_name == "lattice" && !s.radii.empty()) {
    radii = parse_range(s.radii, "--lattice-radii");
  }
  const auto enumeration = enumeration_options(f);
  for (std::size_t n : sizes) {
    for (std::size_t k : lengths) {
      for (std::size_t r : radii) {
        SpecFlags point = f;
        if (n != 0) {
          point.alphabet_size = n;
        }
        point.length = k;
        point.lattice_radius = r;
        std::optional<ClassSpec> spec;
        try {
          spec = make_spec(point);
        } catch (const std::invalid_argument& e) {
          json j{{"class", f.class_name}, {"n", n}, {"k", k},
                 {"error", e.what()}};
          out << j.dump() << "\n";
          continue;
        }
        out << sweep_point(*spec, enumeration).dump() << "\n";
      }
    }
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Universal cycles of restricted word classes", "ucyc"};
  app.require_subcommand(1);

  SpecFlags gen_flags, verify_flags, stats_flags, count_flags, list_flags,
      sweep_flags;
  bool trace = false;
  std::string cycle_text, cycle_file;
  SweepFlags sweep;

  auto* gen = app.add_subcommand("gen", "Construct a U-cycle");
  add_spec_flags(gen, gen_flags);
  gen->add_flag("--trace", trace, "Also print the raw edge traversal");

  auto* ver = app.add_subcommand("verify", "Check a cycle against a class");
  add_spec_flags(ver, verify_flags);
  auto* cycle_opt = ver->add_option("--cycle", cycle_text, "Cycle text");
  auto* file_opt =
      ver->add_option("--cycle-file", cycle_file, "File holding the cycle");
  cycle_opt->excludes(file_opt);

  auto* stats = app.add_subcommand("stats", "Transition digraph diagnostics");
  add_spec_flags(stats, stats_flags);

  auto* cnt = app.add_subcommand("count", "Count class members");
  add_spec_flags(cnt, count_flags);

  auto* lst = app.add_subcommand("list", "List class members in rank order");
  add_spec_flags(lst, list_flags);

  auto* swp = app.add_subcommand(
      "sweep", "One JSON line per grid point: empirical vs claimed existence");
  add_spec_flags(swp, sweep_flags, false);
  swp->add_option("--lengths", sweep.lengths, "Word lengths, a..b or a,b,c")
      ->required();
  swp->add_option("--alphabet-sizes", sweep.alphabet_sizes,
                  "Alphabet sizes, a..b or a,b,c");
  swp->add_option("--lattice-radii", sweep.radii, "Lattice radii, a..b");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      return cmd_gen(gen_flags, trace, out, err);
    }
    if (*ver) {
      if (cycle_text.empty() && cycle_file.empty()) {
        throw UsageError("verify needs --cycle or --cycle-file");
      }
      return cmd_verify(verify_flags, cycle_text, cycle_file, out, err);
    }
    if (*stats) {
      return cmd_stats(stats_flags, out, err);
    }
    if (*cnt) {
      return cmd_count(count_flags, out, err);
    }
    if (*lst) {
      return cmd_list(list_flags, out, err);
    }
    if (*swp) {
      return cmd_sweep(sweep_flags, sweep, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ucyc::cli
