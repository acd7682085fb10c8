// Copyright 2026 The ShareFair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHAREFAIR_SRC_ENUMERATION_HPP_
#define SHAREFAIR_SRC_ENUMERATION_HPP_

// Depth-first enumeration of item-to-agent-set assignments, shared by every
// oracle. Each item picks one option (an agent bitmask) from a fixed,
// lexicographically ordered list; items may carry a group whose per-agent
// count is capped. Two drivers:
//
//   run_maximin  max over assignments of min_j sums[e][j], for several
//                evaluators e at once. Optional first-use symmetry rule.
//   run_search   first assignment where every agent's own sum reaches its
//                threshold, pruned on reachable value.
//
// Both are templated on the accumulator scalar (int64_t after integer
// scaling, or Rational when scaled values would overflow).

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sharefair/error.hpp"
#include "sharefair/rational.hpp"

namespace sharefair::detail {

using Mask = std::uint32_t;
inline constexpr int kMaxAgents = 31;

// Agent subsets with size in [min_size, max_size], ordered as sorted tuples
// ({0} < {0,1} < {0,1,2} < {0,2} < {1} < ...).
std::vector<Mask> subset_options(int agents, int min_size, int max_size);

std::vector<int> mask_members(Mask m);

struct ItemSpace {
  int agents = 0;
  int items = 0;
  std::vector<Mask> options;
  // Optional per-item group and per-group cap on items per agent.
  std::vector<int> item_group;
  std::vector<int> group_cap;
  // Require agents to appear in first-use order.
  bool symmetric = false;

  int groups() const { return static_cast<int>(group_cap.size()); }
};

// weight(e, item, size): what evaluator e gets from `item` in a bundle when
// the item is held by `size` agents.
template <class Scalar>
struct Weights {
  int evaluators = 0;
  int items = 0;
  int max_size = 0;
  std::vector<Scalar> data;

  Weights(int e, int i, int s)
      : evaluators(e), items(i), max_size(s), data(static_cast<std::size_t>(e) * i * (s + 1), Scalar(0)) {}
  Scalar& at(int e, int item, int size) {
    return data[(static_cast<std::size_t>(e) * items + item) * (max_size + 1) + size];
  }
  const Scalar& at(int e, int item, int size) const {
    return data[(static_cast<std::size_t>(e) * items + item) * (max_size + 1) + size];
  }
};

class LeafCounter {
 public:
  LeafCounter(std::uint64_t limit, std::string what) : limit_(limit), what_(std::move(what)) {}

  // Adds a local batch; throws once the global total passes the limit.
  void add(std::uint64_t n) {
    std::uint64_t total = total_.fetch_add(n) + n;
    if (total > limit_) throw BudgetExceeded(limit_, what_);
  }
  std::uint64_t total() const { return total_.load(); }

 private:
  std::uint64_t limit_;
  std::string what_;
  std::atomic<std::uint64_t> total_{0};
};

// Node state along a DFS path.
template <class Scalar>
struct Frame {
  std::vector<Scalar> sums;       // [e * agents + j] (maximin) or [j] (search)
  std::vector<int> group_count;   // [j * groups + grp]
  std::vector<int> choice;        // option index per assigned item
  int used = 0;                   // agents introduced so far (symmetric mode)
};

template <class Scalar>
bool option_allowed(const ItemSpace& space, const Frame<Scalar>& f, int item, Mask m, int* new_used) {
  if (space.symmetric) {
    const Mask old_bits = f.used >= 32 ? ~Mask{0} : ((Mask{1} << f.used) - 1);
    const Mask fresh = m & ~old_bits;
    const int t = std::popcount(fresh);
    const Mask expected = t == 0 ? 0 : (((Mask{1} << t) - 1) << f.used);
    if (fresh != expected) return false;
    *new_used = f.used + t;
  } else {
    *new_used = f.used;
  }
  if (!space.item_group.empty()) {
    const int grp = space.item_group[static_cast<std::size_t>(item)];
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      if (f.group_count[static_cast<std::size_t>(j) * space.groups() + grp] >= space.group_cap[grp]) return false;
    }
  }
  return true;
}

template <class Scalar>
void apply_option(const ItemSpace& space, Frame<Scalar>& f, int item, int opt, int new_used, int evaluators,
                  const Weights<Scalar>& w, int sign) {
  const Mask m = space.options[static_cast<std::size_t>(opt)];
  const int size = std::popcount(m);
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    for (int e = 0; e < evaluators; ++e) {
      auto& s = f.sums[static_cast<std::size_t>(e) * space.agents + j];
      if (sign > 0) {
        s += w.at(e, item, size);
      } else {
        s -= w.at(e, item, size);
      }
    }
    if (!space.item_group.empty()) {
      f.group_count[static_cast<std::size_t>(j) * space.groups() + space.item_group[item]] += sign;
    }
  }
  if (sign > 0) {
    f.choice.push_back(opt);
    f.used = new_used;
  } else {
    f.choice.pop_back();
  }
}

// Prefix frames at a depth giving enough work units for `chunks` workers,
// in DFS order. Depth 0 yields the root alone.
template <class Scalar>
std::vector<Frame<Scalar>> split_prefixes(const ItemSpace& space, const Frame<Scalar>& root, int evaluators,
                                          const Weights<Scalar>& w, int chunks) {
  std::vector<Frame<Scalar>> level{root};
  int depth = 0;
  while (chunks > 1 && static_cast<int>(level.size()) < 8 * chunks && depth < space.items) {
    std::vector<Frame<Scalar>> next;
    for (const auto& f : level) {
      for (int opt = 0; opt < static_cast<int>(space.options.size()); ++opt) {
        int new_used = 0;
        if (!option_allowed(space, f, depth, space.options[opt], &new_used)) continue;
        Frame<Scalar> child = f;
        apply_option(space, child, depth, opt, new_used, evaluators, w, +1);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
    ++depth;
  }
  return level;
}

// Runs `work(index)` for index in [0, n) over `chunks` threads, contiguous
// ranges per thread; rethrows the first exception.
template <class Fn>
void run_chunks(int n, int chunks, Fn&& work) {
  chunks = std::max(1, std::min(chunks, n));
  if (chunks == 1) {
    for (int i = 0; i < n; ++i) work(i);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int c = 0; c < chunks; ++c) {
    const int lo = static_cast<int>(static_cast<long long>(n) * c / chunks);
    const int hi = static_cast<int>(static_cast<long long>(n) * (c + 1) / chunks);
    threads.emplace_back([&, lo, hi] {
      try {
        for (int i = lo; i < hi; ++i) work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// Maximin

template <class Scalar>
struct MaximinOutcome {
  std::vector<Scalar> best;
  std::vector<std::vector<int>> witness;  // option index per item
  std::vector<bool> found;
  std::uint64_t leaves = 0;
};

template <class Scalar>
class MaximinWorker {
 public:
  MaximinWorker(const ItemSpace& space, const Weights<Scalar>& w, LeafCounter& counter)
      : space_(space), w_(w), counter_(counter) {
    out_.best.assign(static_cast<std::size_t>(w.evaluators), Scalar(0));
    out_.witness.resize(static_cast<std::size_t>(w.evaluators));
    out_.found.assign(static_cast<std::size_t>(w.evaluators), false);
  }

  void run(Frame<Scalar> frame) {
    frame_ = std::move(frame);
    dfs(static_cast<int>(frame_.choice.size()));
    flush();
  }

  MaximinOutcome<Scalar>& outcome() { return out_; }

 private:
  static constexpr std::uint64_t kBatch = 1 << 14;

  void flush() {
    if (pending_ > 0) {
      counter_.add(pending_);
      pending_ = 0;
    }
  }

  void leaf() {
    ++out_.leaves;
    if (++pending_ >= kBatch) flush();
    for (int e = 0; e < w_.evaluators; ++e) {
      const auto* row = &frame_.sums[static_cast<std::size_t>(e) * space_.agents];
      const Scalar* lo = std::min_element(row, row + space_.agents);
      if (!out_.found[e] || *lo > out_.best[e]) {
        out_.best[e] = *lo;
        out_.witness[e] = frame_.choice;
        out_.found[e] = true;
      }
    }
  }

  void dfs(int item) {
    if (item == space_.items) {
      leaf();
      return;
    }
    for (int opt = 0; opt < static_cast<int>(space_.options.size()); ++opt) {
      int new_used = 0;
      if (!option_allowed(space_, frame_, item, space_.options[opt], &new_used)) continue;
      const int saved_used = frame_.used;
      apply_option(space_, frame_, item, opt, new_used, w_.evaluators, w_, +1);
      dfs(item + 1);
      apply_option(space_, frame_, item, opt, new_used, w_.evaluators, w_, -1);
      frame_.used = saved_used;
    }
  }

  const ItemSpace& space_;
  const Weights<Scalar>& w_;
  LeafCounter& counter_;
  Frame<Scalar> frame_;
  MaximinOutcome<Scalar> out_;
  std::uint64_t pending_ = 0;
};

template <class Scalar>
MaximinOutcome<Scalar> run_maximin(const ItemSpace& space, const Weights<Scalar>& w, std::uint64_t max_states,
                                   int chunks, const std::string& what) {
  if (space.agents > kMaxAgents) throw Unsupported("oracles handle at most 31 agents");
  Frame<Scalar> root;
  root.sums.assign(static_cast<std::size_t>(w.evaluators) * space.agents, Scalar(0));
  root.group_count.assign(static_cast<std::size_t>(space.agents) * space.groups(), 0);
  auto prefixes = split_prefixes(space, root, w.evaluators, w, chunks);

  LeafCounter counter(max_states, what);
  std::vector<MaximinOutcome<Scalar>> parts(prefixes.size());
  run_chunks(static_cast<int>(prefixes.size()), chunks, [&](int p) {
    MaximinWorker<Scalar> worker(space, w, counter);
    worker.run(prefixes[static_cast<std::size_t>(p)]);
    parts[static_cast<std::size_t>(p)] = std::move(worker.outcome());
  });

  // Merge in prefix (= DFS) order with strict improvement, so the witness is
  // the one a sequential run would keep.
  MaximinOutcome<Scalar> out;
  out.best.assign(static_cast<std::size_t>(w.evaluators), Scalar(0));
  out.witness.resize(static_cast<std::size_t>(w.evaluators));
  out.found.assign(static_cast<std::size_t>(w.evaluators), false);
  for (auto& part : parts) {
    out.leaves += part.leaves;
    for (int e = 0; e < w.evaluators; ++e) {
      if (part.found[e] && (!out.found[e] || part.best[e] > out.best[e])) {
        out.best[e] = part.best[e];
        out.witness[e] = std::move(part.witness[e]);
        out.found[e] = true;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Threshold search (evaluator e == agent e)

template <class Scalar>
class SearchWorker {
 public:
  SearchWorker(const ItemSpace& space, const Weights<Scalar>& w, const std::vector<Scalar>& thresholds,
               const std::vector<Scalar>& suffix_max, LeafCounter& counter, std::atomic<int>& best_prefix, int prefix)
      : space_(space),
        w_(w),
        thresholds_(thresholds),
        suffix_max_(suffix_max),
        counter_(counter),
        best_prefix_(best_prefix),
        prefix_(prefix) {}

  std::optional<std::vector<int>> run(Frame<Scalar> frame) {
    frame_ = std::move(frame);
    dfs(static_cast<int>(frame_.choice.size()));
    flush();
    return found_;
  }

 private:
  static constexpr std::uint64_t kBatch = 1 << 12;

  void flush() {
    if (pending_ > 0) {
      counter_.add(pending_);
      pending_ = 0;
    }
  }

  bool reachable(int item) const {
    for (int i = 0; i < space_.agents; ++i) {
      if (frame_.sums[static_cast<std::size_t>(i) * space_.agents + i] +
              suffix_max_[static_cast<std::size_t>(i) * (space_.items + 1) + item] <
          thresholds_[i]) {
        return false;
      }
    }
    return true;
  }

  bool dfs(int item) {
    if (++pending_ >= kBatch) {
      flush();
      if (best_prefix_.load() < prefix_) return true;  // an earlier prefix already succeeded
    }
    if (!reachable(item)) return false;
    if (item == space_.items) {
      found_ = frame_.choice;
      return true;
    }
    for (int opt = 0; opt < static_cast<int>(space_.options.size()); ++opt) {
      int new_used = 0;
      if (!option_allowed(space_, frame_, item, space_.options[opt], &new_used)) continue;
      apply_option(space_, frame_, item, opt, new_used, space_.agents, w_, +1);
      const bool stop = dfs(item + 1);
      apply_option(space_, frame_, item, opt, new_used, space_.agents, w_, -1);
      if (stop) return true;
    }
    return false;
  }

  const ItemSpace& space_;
  const Weights<Scalar>& w_;
  const std::vector<Scalar>& thresholds_;
  const std::vector<Scalar>& suffix_max_;
  LeafCounter& counter_;
  std::atomic<int>& best_prefix_;
  int prefix_;
  Frame<Scalar> frame_;
  std::optional<std::vector<int>> found_;
  std::uint64_t pending_ = 0;
};

template <class Scalar>
struct SearchOutcome {
  std::optional<std::vector<int>> witness;
  std::uint64_t nodes = 0;
};

// Evaluators of `w` must be the agents themselves. Symmetry is not allowed
// here (thresholds differ per agent).
template <class Scalar>
SearchOutcome<Scalar> run_search(const ItemSpace& space, const Weights<Scalar>& w, const std::vector<Scalar>& thresholds,
                                 std::uint64_t max_states, int chunks, const std::string& what) {
  if (space.symmetric) throw InvariantViolation("threshold search cannot use the symmetry rule");
  if (space.agents > kMaxAgents) throw Unsupported("oracles handle at most 31 agents");
  if (w.evaluators != space.agents) throw InvariantViolation("search weights must be per agent");

  // suffix_max[i][item]: most agent i can still collect from items >= item.
  std::vector<Scalar> suffix_max(static_cast<std::size_t>(space.agents) * (space.items + 1), Scalar(0));
  for (int i = 0; i < space.agents; ++i) {
    for (int item = space.items - 1; item >= 0; --item) {
      Scalar best(0);
      for (Mask m : space.options) {
        if ((m >> i) & 1U) best = std::max(best, Scalar(w.at(i, item, std::popcount(m))));
      }
      suffix_max[static_cast<std::size_t>(i) * (space.items + 1) + item] =
          suffix_max[static_cast<std::size_t>(i) * (space.items + 1) + item + 1] + best;
    }
  }

  Frame<Scalar> root;
  root.sums.assign(static_cast<std::size_t>(space.agents) * space.agents, Scalar(0));
  root.group_count.assign(static_cast<std::size_t>(space.agents) * space.groups(), 0);
  auto prefixes = split_prefixes(space, root, space.agents, w, chunks);

  LeafCounter counter(max_states, what);
  std::atomic<int> best_prefix{static_cast<int>(prefixes.size())};
  std::vector<std::optional<std::vector<int>>> found(prefixes.size());
  run_chunks(static_cast<int>(prefixes.size()), chunks, [&](int p) {
    if (best_prefix.load() < p) return;
    SearchWorker<Scalar> worker(space, w, thresholds, suffix_max, counter, best_prefix, p);
    found[static_cast<std::size_t>(p)] = worker.run(prefixes[static_cast<std::size_t>(p)]);
    if (found[static_cast<std::size_t>(p)]) {
      int current = best_prefix.load();
      while (p < current && !best_prefix.compare_exchange_weak(current, p)) {
      }
    }
  });

  SearchOutcome<Scalar> out;
  out.nodes = counter.total();
  for (auto& f : found) {
    if (f) {
      out.witness = std::move(f);
      break;
    }
  }
  return out;
}

}  // namespace sharefair::detail

#endif  // SHAREFAIR_SRC_ENUMERATION_HPP_
