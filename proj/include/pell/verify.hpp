#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pell/expansion.hpp"
#include "pell/pellstruct.hpp"

namespace pell::verify {

// One comparison: `expected` is what the claim under test predicts, `actual`
// is what enumeration measures. `note` carries side observations and never
// affects `pass`.
struct Entry {
  std::string check;
  int n = -1;
  int i = -1;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string note;
};

struct Report {
  std::vector<Entry> entries;
  std::map<std::string, double> check_seconds;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  std::int64_t passed() const {
    std::int64_t k = 0;
    for (const auto& e : entries) k += e.pass ? 1 : 0;
    return k;
  }
  std::int64_t failed() const { return static_cast<std::int64_t>(entries.size()) - passed(); }
};

struct Options {
  int max_n = 10;
  std::vector<std::string> checks;  // empty selects every check
  int threads = 1;
  std::uint64_t seed = 1;
  int build_limit = kDefaultPellBuildLimit;
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "initial",   "recurrence", "closed",    "closed-small-n",
      "edges",     "irr",        "sigma",     "convolution",
      "classify",  "structural", "expansion", "pell-expansion"};
  return names;
}

namespace detail {

// Closed-form branch evaluated without the n >= 4 gate; usable wherever the
// Pell indices it touches exist. Throws when they do not.
inline int128 closed_branch_any_n(int n, int i) {
  const int128 nn = n;
  switch (i) {
    case 0:
      return exact_div((nn + 2) * pell_number(n - 2) + (nn + 1) * pell_number(n - 3), 2);
    case 1:
      return nn * pell_number(n - 2);
    case 2:
      return exact_div((5 * nn - 3) * pell_number(n - 3) +
                           (3 * nn - 2) * pell_number(n - 4), 4);
    case 3:
      return (nn - 1) * pell_number(n - 3);
    default:
      return exact_div((nn - 3) * pell_number(n - 3) + (nn - 2) * pell_number(n - 4), 4);
  }
}

class Runner {
 public:
  explicit Runner(const Options& options) : opt_(options) {
    if (opt_.max_n < 1) throw std::invalid_argument("verify: max_n must be >= 1");
    if (opt_.max_n > opt_.build_limit)
      throw std::invalid_argument("verify: max_n " + std::to_string(opt_.max_n) +
                                  " above build limit " + std::to_string(opt_.build_limit));
    selected_ = opt_.checks;
    for (const auto& name : selected_) {
      const auto& known = check_names();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw std::invalid_argument("verify: unknown check \"" + name + "\"");
    }
    hist_.resize(static_cast<std::size_t>(opt_.max_n) + 1);
  }

  Report run() {
    run_check("initial", [this] { check_initial(); });
    run_check("recurrence", [this] { check_recurrence(); });
    run_check("closed", [this] { check_closed(); });
    run_check("closed-small-n", [this] { check_closed_small_n(); });
    run_check("edges", [this] { check_edges(); });
    run_check("irr", [this] { check_irr(); });
    run_check("sigma", [this] { check_sigma(); });
    run_check("convolution", [this] { check_convolution(); });
    run_check("classify", [this] { check_classify(); });
    run_check("structural", [this] { check_structural(); });
    run_check("expansion", [this] { check_expansion(); });
    run_check("pell-expansion", [this] { check_pell_expansion(); });
    return std::move(report_);
  }

 private:
  bool enabled(const std::string& name) const {
    return selected_.empty() ||
           std::find(selected_.begin(), selected_.end(), name) != selected_.end();
  }

  template <typename Fn>
  void run_check(const std::string& name, Fn fn) {
    if (!enabled(name)) return;
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    report_.check_seconds[name] = std::chrono::duration<double>(t1 - t0).count();
  }

  const ImbalanceHistogram& hist_for(int n) {
    auto& slot = hist_[static_cast<std::size_t>(n)];
    if (!slot) {
      const Graph g = build_pell_graph(n, opt_.build_limit);
      slot = imbalance_histogram(g, opt_.threads);
    }
    return *slot;
  }

  void add(std::string check, int n, int i, int128 expected, int128 actual,
           std::string note = {}) {
    Entry e;
    e.check = std::move(check);
    e.n = n;
    e.i = i;
    e.expected = to_string(expected);
    e.actual = to_string(actual);
    e.pass = expected == actual;
    e.note = std::move(note);
    report_.entries.push_back(std::move(e));
  }

  void check_initial() {
    for (int n = 1; n <= std::min(3, opt_.max_n); ++n) {
      const auto row = imbalance_class_recurrence_row(n);  // the seeded rows
      for (int i = 0; i <= 4; ++i)
        add("initial", n, i, row[static_cast<std::size_t>(i)], hist_for(n).count(i));
    }
  }

  void check_recurrence() {
    for (int n = 4; n <= opt_.max_n; ++n) {
      const auto row = imbalance_class_recurrence_row(n);
      for (int i = 0; i <= 4; ++i)
        add("recurrence", n, i, row[static_cast<std::size_t>(i)], hist_for(n).count(i));
    }
  }

  void check_closed() {
    for (int n = 4; n <= opt_.max_n; ++n)
      for (int i = 0; i <= 4; ++i)
        add("closed", n, i, imbalance_class_closed(n, i), hist_for(n).count(i));
  }

  // The closed forms are stated from n = 4 on; report, without asserting,
  // whether each branch also matches below that where it is evaluable.
  void check_closed_small_n() {
    for (int n = 1; n <= std::min(3, opt_.max_n); ++n) {
      for (int i = 0; i <= 4; ++i) {
        Entry e;
        e.check = "closed-small-n";
        e.n = n;
        e.i = i;
        e.actual = to_string(hist_for(n).count(i));
        e.pass = true;
        try {
          const int128 value = closed_branch_any_n(n, i);
          e.expected = to_string(value);
          e.note = value == hist_for(n).count(i)
                       ? "informational: branch matches below its stated range"
                       : "informational: branch differs below its stated range";
        } catch (const std::exception&) {
          e.expected = "n/a";
          e.note = "informational: branch not evaluable at this order";
        }
        report_.entries.push_back(std::move(e));
      }
    }
  }

  void check_edges() {
    for (int n = 1; n <= opt_.max_n; ++n)
      add("edges", n, -1, exact_div(int128{n} * pell_number(n), 2), hist_for(n).total);
  }

  void check_irr() {
    for (int n = 1; n <= opt_.max_n; ++n) {
      const int128 brute = hist_for(n).weighted_sum();
      add("irr", n, -1, pell_irregularity_closed(n), brute, "closed form");
      add("irr", n, -1, pell_irregularity_recurrence(n), brute, "recurrence");
    }
  }

  void check_sigma() {
    for (int n = 2; n <= opt_.max_n; ++n)
      add("sigma", n, -1, pell_sigma_closed(n), hist_for(n).weighted_square_sum());
  }

  void check_convolution() {
    for (int n = 4; n <= opt_.max_n; ++n) {
      const int128 brute = hist_for(n).count(4);
      const int128 displayed = imbalance4_convolution_displayed(n);
      std::string note = "displayed-index form gives " + to_string(displayed) +
                         (displayed == brute ? " (matches enumeration)"
                                             : " (differs from enumeration)");
      add("convolution", n, 4, imbalance4_convolution(n), brute, std::move(note));
    }
  }

  void check_classify() {
    for (int n = 1; n <= opt_.max_n; ++n) {
      const Graph g = build_pell_graph(n, opt_.build_limit);
      std::int64_t violations = 0;
      std::string first;
      g.for_each_edge([&](int u, int v) {
        const EdgeClass ec = classify_pell_edge(g.label(u), g.label(v));
        const int measured = std::abs(g.degree(u) - g.degree(v));
        const bool in_bounds = ec.kind == EdgeKind::flip
                                   ? measured <= 2
                                   : (measured >= 2 && measured <= 4);
        if (ec.predicted_imbalance != measured || !in_bounds || measured > 4) {
          if (violations == 0)
            first = g.label(u) + "-" + g.label(v) + " predicted " +
                    std::to_string(ec.predicted_imbalance) + " measured " +
                    std::to_string(measured);
          ++violations;
        }
      });
      add("classify", n, -1, 0, violations, first);
    }
  }

  void check_structural() {
    for (int n = 3; n <= opt_.max_n; ++n) {
      const auto r = structural_imbalance_deltas(n, opt_.build_limit);
      add("structural", n, -1, 0, static_cast<std::int64_t>(r.violations.size()),
          r.violations.empty() ? "" : r.violations.front());
    }
  }

  void check_expansion() {
    // Fixed instance: a 4-cycle with a pendant sharing an edge with another
    // 4-cycle, expanded across the overlap.
    {
      const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {2, 6}, {6, 5}, {5, 1}});
      const ExpansionSpec spec{{0, 1, 2, 3, 4}, {1, 2, 5, 6}};
      add("expansion", g.vertex_count(), -1, irr_expansion_rhs(g, spec),
          irregularity(expand(g, spec).graph), "fixed instance");
    }
    // Doubling: v1 = v2 = V must give exactly twice the irregularity.
    {
      std::vector<std::pair<std::string, Graph>> hosts;
      for (int n = 1; n <= 4; ++n)
        hosts.emplace_back("Q_" + std::to_string(n), build_hypercube(n));
      for (int n = 1; n <= 6; ++n)
        hosts.emplace_back("G_" + std::to_string(n), build_fibonacci_cube(n));
      for (int n = 1; n <= 5; ++n)
        hosts.emplace_back("P_" + std::to_string(n), build_pell_graph(n));
      for (const auto& [name, g] : hosts) {
        ExpansionSpec spec;
        spec.v1.resize(static_cast<std::size_t>(g.vertex_count()));
        std::iota(spec.v1.begin(), spec.v1.end(), 0);
        spec.v2 = spec.v1;
        const std::int64_t doubled = irregularity(expand(g, spec).graph);
        Entry e;
        e.check = "expansion";
        e.n = g.vertex_count();
        e.expected = to_string(int128{irr_doubled(g)});
        e.actual = to_string(int128{doubled});
        e.pass = irr_doubled(g) == doubled && doubled == 2 * irregularity(g);
        e.note = "doubling " + name;
        report_.entries.push_back(std::move(e));
      }
    }
    // Random specs sampled across seeds; peripheral cases also cross-checked
    // against the peripheral specialization.
    int emitted = 0;
    for (std::uint64_t t = 0; emitted < 200; ++t) {
      const auto trace = random_expansion_trace(6, opt_.seed + t,
                                                SamplerOptions{200, 200});
      for (const auto& step : trace.steps) {
        const std::int64_t rhs = irr_expansion_rhs(step.host, step.spec);
        const std::int64_t measured = irregularity(expand(step.host, step.spec).graph);
        Entry e;
        e.check = "expansion";
        e.n = step.host.vertex_count();
        e.i = emitted;
        e.expected = to_string(int128{rhs});
        e.actual = to_string(int128{measured});
        e.pass = rhs == measured;
        const int n = step.host.vertex_count();
        const bool peripheral = static_cast<int>(step.spec.v1.size()) == n ||
                                static_cast<int>(step.spec.v2.size()) == n;
        if (peripheral) {
          const std::int64_t prhs = irr_peripheral_rhs(step.host, step.spec);
          e.pass = e.pass && prhs == rhs;
          e.note = "peripheral; specialized rhs " + to_string(int128{prhs});
        }
        report_.entries.push_back(std::move(e));
        ++emitted;
      }
    }
  }

  // The Pell graph re-created as an expansion of the doubled one-smaller
  // Pell graph, with the second side restricted to the 11-block image.
  void check_pell_expansion() {
    for (int n = 3; n <= std::min(opt_.max_n, 9); ++n) {
      const Graph smaller = build_pell_graph(n - 1, opt_.build_limit);
      ExpansionSpec all;
      all.v1.resize(static_cast<std::size_t>(smaller.vertex_count()));
      std::iota(all.v1.begin(), all.v1.end(), 0);
      all.v2 = all.v1;
      const Expansion doubled = expand(smaller, all);
      ExpansionSpec spec;
      spec.v1.resize(static_cast<std::size_t>(doubled.graph.vertex_count()));
      std::iota(spec.v1.begin(), spec.v1.end(), 0);
      for (int v = 0; v < smaller.vertex_count(); ++v)
        if (smaller.label(v)[0] == '1')
          spec.v2.push_back(doubled.side2_index[static_cast<std::size_t>(v)]);
      std::sort(spec.v2.begin(), spec.v2.end());
      add("pell-expansion", n, -1, hist_for(n).weighted_sum(),
          irregularity(expand(doubled.graph, spec).graph),
          "expansion of the doubled smaller Pell graph");
    }
  }

  Options opt_;
  std::vector<std::string> selected_;
  std::vector<std::optional<ImbalanceHistogram>> hist_;
  Report report_;
};

}  // namespace detail

inline Report run(const Options& options) { return detail::Runner(options).run(); }

}  // namespace pell::verify
