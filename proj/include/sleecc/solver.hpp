#ifndef SLEECC_SOLVER_HPP
#define SLEECC_SOLVER_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "sleecc/cnf.hpp"

namespace sleecc {

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
};

// Conflict-driven DPLL: two watched literals, first-UIP clause learning,
// non-chronological backjumping, no restarts. Decisions always pick the
// lowest unassigned variable and try false first, so runs are reproducible.
class Solver {
public:
  explicit Solver(const ClauseSet& cs) : num_vars_(cs.num_vars()) {
    const auto n = static_cast<std::size_t>(num_vars_) + 1;
    value_.assign(n, kUnassigned);
    level_.assign(n, 0);
    reason_.assign(n, kNoReason);
    seen_.assign(n, 0);
    watches_.assign(2 * n, {});
    for (const auto& clause : cs.clauses()) add_input_clause(clause);
  }

  // Returns a model indexed by variable (entry 0 unused), or nullopt when the
  // clauses are unsatisfiable.
  std::optional<std::vector<bool>> solve() {
    if (unsat_) return std::nullopt;
    while (true) {
      int conflict = propagate();
      if (conflict != kNoReason) {
        ++stats_.conflicts;
        if (decision_level() == 0) return std::nullopt;
        auto [learnt, backjump] = analyze(conflict);
        backtrack(backjump);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          int ci = store(std::move(learnt));
          enqueue(clauses_[static_cast<std::size_t>(ci)][0], ci);
        }
        continue;
      }
      int var = next_unassigned();
      if (var == 0) break;
      ++stats_.decisions;
      trail_lim_.push_back(trail_.size());
      enqueue(-var, kNoReason);
    }
    std::vector<bool> model(static_cast<std::size_t>(num_vars_) + 1, false);
    for (int v = 1; v <= num_vars_; ++v) model[static_cast<std::size_t>(v)] = value_[static_cast<std::size_t>(v)] == kTrue;
    return model;
  }

  const SolverStats& stats() const noexcept { return stats_; }

private:
  static constexpr std::int8_t kUnassigned = -1;
  static constexpr std::int8_t kFalse = 0;
  static constexpr std::int8_t kTrue = 1;
  static constexpr int kNoReason = -1;

  static std::size_t slot(int lit) {
    return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit < 0 ? 1 : 0);
  }
  std::int8_t lit_value(int lit) const {
    std::int8_t v = value_[static_cast<std::size_t>(std::abs(lit))];
    if (v == kUnassigned) return v;
    return (lit > 0) == (v == kTrue) ? kTrue : kFalse;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void add_input_clause(const std::vector<int>& clause) {
    if (unsat_) return;
    if (clause.empty()) {
      unsat_ = true;
      return;
    }
    if (clause.size() == 1) {
      std::int8_t v = lit_value(clause[0]);
      if (v == kFalse) unsat_ = true;
      else if (v == kUnassigned) enqueue(clause[0], kNoReason);
      return;
    }
    store(clause);
  }

  int store(std::vector<int> clause) {
    int ci = static_cast<int>(clauses_.size());
    watches_[slot(clause[0])].push_back(ci);
    watches_[slot(clause[1])].push_back(ci);
    clauses_.push_back(std::move(clause));
    return ci;
  }

  void enqueue(int lit, int reason) {
    auto v = static_cast<std::size_t>(std::abs(lit));
    value_[v] = lit > 0 ? kTrue : kFalse;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(lit);
  }

  // Returns the index of a falsified clause, or kNoReason.
  int propagate() {
    while (qhead_ < trail_.size()) {
      int falsified = -trail_[qhead_++];
      ++stats_.propagations;
      auto& watchers = watches_[slot(falsified)];
      std::size_t keep = 0;
      for (std::size_t k = 0; k < watchers.size(); ++k) {
        int ci = watchers[k];
        auto& c = clauses_[static_cast<std::size_t>(ci)];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (lit_value(c[0]) == kTrue) {
          watchers[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t j = 2; j < c.size(); ++j) {
          if (lit_value(c[j]) != kFalse) {
            std::swap(c[1], c[j]);
            watches_[slot(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        watchers[keep++] = ci;
        if (lit_value(c[0]) == kFalse) {
          for (std::size_t j = k + 1; j < watchers.size(); ++j) watchers[keep++] = watchers[j];
          watchers.resize(keep);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c[0], ci);
      }
      watchers.resize(keep);
    }
    return kNoReason;
  }

  // First-UIP analysis. The asserting literal is placed first and a literal
  // of the backjump level second, so both are valid watches.
  std::pair<std::vector<int>, int> analyze(int conflict) {
    std::vector<int> learnt{0};
    int pending = 0;
    int lit = 0;
    std::size_t idx = trail_.size();
    int ci = conflict;
    do {
      const auto& c = clauses_[static_cast<std::size_t>(ci)];
      for (int q : c) {
        if (q == lit) continue;
        auto v = static_cast<std::size_t>(std::abs(q));
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        if (level_[v] == decision_level()) ++pending;
        else learnt.push_back(q);
      }
      do {
        lit = trail_[--idx];
      } while (!seen_[static_cast<std::size_t>(std::abs(lit))]);
      seen_[static_cast<std::size_t>(std::abs(lit))] = 0;
      ci = reason_[static_cast<std::size_t>(std::abs(lit))];
      --pending;
    } while (pending > 0);
    learnt[0] = -lit;

    int backjump = 0;
    std::size_t best = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      int lv = level_[static_cast<std::size_t>(std::abs(learnt[i]))];
      if (lv > backjump) {
        backjump = lv;
        best = i;
      }
    }
    if (learnt.size() > 1) std::swap(learnt[1], learnt[best]);
    for (int q : learnt) seen_[static_cast<std::size_t>(std::abs(q))] = 0;
    return {std::move(learnt), backjump};
  }

  void backtrack(int level) {
    if (decision_level() <= level) return;
    std::size_t stop = trail_lim_[static_cast<std::size_t>(level)];
    for (std::size_t i = trail_.size(); i-- > stop;) {
      auto v = static_cast<std::size_t>(std::abs(trail_[i]));
      value_[v] = kUnassigned;
      reason_[v] = kNoReason;
    }
    trail_.resize(stop);
    trail_lim_.resize(static_cast<std::size_t>(level));
    qhead_ = trail_.size();
    next_var_ = 1;
  }

  int next_unassigned() {
    while (next_var_ <= num_vars_ && value_[static_cast<std::size_t>(next_var_)] != kUnassigned) ++next_var_;
    return next_var_ <= num_vars_ ? next_var_ : 0;
  }

  int num_vars_;
  bool unsat_ = false;
  std::vector<std::int8_t> value_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<char> seen_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  int next_var_ = 1;
  SolverStats stats_;
};

struct SolveResult {
  bool satisfiable = false;
  std::vector<bool> model; // indexed by variable, entry 0 unused
  SolverStats stats;
};

inline SolveResult solve(const ClauseSet& cs) {
  Solver solver(cs);
  auto model = solver.solve();
  SolveResult r;
  r.stats = solver.stats();
  if (model) {
    r.satisfiable = true;
    r.model = std::move(*model);
  }
  return r;
}

} // namespace sleecc

#endif // SLEECC_SOLVER_HPP
