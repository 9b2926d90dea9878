#include "vetomanip/partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace vetomanip {
namespace {

void check_numbers(const std::vector<std::int64_t>& numbers) {
  for (std::int64_t v : numbers) {
    if (v < 0) {
      throw std::invalid_argument("partition: numbers must be non-negative");
    }
  }
}

// Replacing two entries by their difference pins them to opposite bags,
// replacing them by their sum pins them to the same bag. Leaf ids are input
// indices; combined entries get ids past the input size.
struct Combine {
  int left;
  int right;
  bool is_sum;
};

struct Entry {
  std::int64_t value;
  int id;
};

class CkkSearch {
 public:
  CkkSearch(const std::vector<std::int64_t>& numbers, std::int64_t threshold)
      : input_size_(static_cast<int>(numbers.size())),
        threshold_(threshold),
        decision_mode_(threshold >= 0) {
    items_.reserve(numbers.size() + 1);
    for (int i = 0; i < input_size_; ++i) {
      items_.push_back({numbers[i], i});
      total_ += numbers[i];
    }
    std::stable_sort(items_.begin(), items_.end(),
                     [](const Entry& x, const Entry& y) { return x.value > y.value; });
    combines_.reserve(numbers.size());
  }

  PartitionOutcome run() {
    dfs();
    PartitionOutcome out;
    out.best_difference = best_;
    out.assignment = std::move(best_assignment_);
    out.feasible = decision_mode_ && best_ <= threshold_;
    out.stats.branches = branches_;
    out.stats.nodes = nodes_;
    out.stats.terminated_early = terminated_early_;
    return out;
  }

 private:
  // Returns true once a certificate within the threshold has been found.
  bool dfs() {
    ++nodes_;
    const std::int64_t largest = items_.empty() ? 0 : items_.front().value;
    const std::int64_t rest = total_ - largest;
    if (largest >= rest) {
      // Dominated: the best completion puts the largest entry alone against
      // everything else. Also covers lists of size <= 2.
      return record_leaf(largest - rest);
    }

    ++branches_;
    const Entry x = items_[0];
    const Entry y = items_[1];
    items_.erase(items_.begin(), items_.begin() + 2);

    combines_.push_back({x.id, y.id, false});
    insert_sorted({x.value - y.value, entry_id()});
    total_ -= 2 * y.value;
    const bool stop = dfs();
    total_ += 2 * y.value;
    erase_entry(entry_id());
    combines_.pop_back();
    if (stop) {
      terminated_early_ = true;  // the sum child was scheduled but never visited
      restore_pair(x, y);
      return true;
    }

    combines_.push_back({x.id, y.id, true});
    items_.insert(items_.begin(), {x.value + y.value, entry_id()});
    const bool stop_sum = dfs();
    items_.erase(items_.begin());
    combines_.pop_back();

    restore_pair(x, y);
    return stop_sum;
  }

  bool record_leaf(std::int64_t difference) {
    if (best_ < 0 || difference < best_) {
      best_ = difference;
      capture_assignment();
      if (decision_mode_ && best_ <= threshold_) return true;
    }
    return false;
  }

  void capture_assignment() {
    best_assignment_.assign(input_size_, 0);
    if (items_.empty()) return;
    label_subtree(items_[0].id, 0);
    for (std::size_t i = 1; i < items_.size(); ++i) label_subtree(items_[i].id, 1);
  }

  void label_subtree(int id, std::uint8_t bag) {
    if (id < input_size_) {
      best_assignment_[id] = bag;
      return;
    }
    const Combine& c = combines_[static_cast<std::size_t>(id - input_size_)];
    label_subtree(c.left, bag);
    label_subtree(c.right, c.is_sum ? bag : static_cast<std::uint8_t>(1 - bag));
  }

  int entry_id() const { return input_size_ + static_cast<int>(combines_.size()) - 1; }

  void insert_sorted(Entry e) {
    auto pos = std::find_if(items_.begin(), items_.end(),
                            [&](const Entry& it) { return it.value < e.value; });
    items_.insert(pos, e);
  }

  void erase_entry(int id) {
    auto pos = std::find_if(items_.begin(), items_.end(),
                            [&](const Entry& it) { return it.id == id; });
    items_.erase(pos);
  }

  void restore_pair(const Entry& x, const Entry& y) {
    items_.insert(items_.begin(), {x, y});
  }

  int input_size_;
  std::int64_t threshold_;
  bool decision_mode_;
  std::vector<Entry> items_;
  std::vector<Combine> combines_;
  std::vector<std::uint8_t> best_assignment_;
  std::int64_t total_ = 0;
  std::int64_t best_ = -1;
  std::uint64_t branches_ = 0;
  std::uint64_t nodes_ = 0;
  bool terminated_early_ = false;
};

}  // namespace

PartitionOutcome kk_heuristic(const PartitionProblem& problem) {
  check_numbers(problem.numbers);
  const int n = static_cast<int>(problem.numbers.size());

  std::vector<Entry> items;
  items.reserve(problem.numbers.size());
  for (int i = 0; i < n; ++i) items.push_back({problem.numbers[i], i});
  std::stable_sort(items.begin(), items.end(),
                   [](const Entry& x, const Entry& y) { return x.value > y.value; });

  std::vector<Combine> combines;
  combines.reserve(problem.numbers.size());
  std::uint64_t steps = 0;
  while (items.size() > 1) {
    const Entry x = items[0];
    const Entry y = items[1];
    items.erase(items.begin(), items.begin() + 2);
    combines.push_back({x.id, y.id, false});
    const Entry merged{x.value - y.value, n + static_cast<int>(combines.size()) - 1};
    auto pos = std::find_if(items.begin(), items.end(),
                            [&](const Entry& it) { return it.value < merged.value; });
    items.insert(pos, merged);
    ++steps;
  }

  PartitionOutcome out;
  out.best_difference = items.empty() ? 0 : items.front().value;
  out.assignment.assign(n, 0);
  if (!items.empty()) {
    // One-sided expansion of the combination tree, root in bag 0.
    std::vector<std::pair<int, std::uint8_t>> stack{{items.front().id, 0}};
    while (!stack.empty()) {
      auto [id, bag] = stack.back();
      stack.pop_back();
      if (id < n) {
        out.assignment[static_cast<std::size_t>(id)] = bag;
        continue;
      }
      const Combine& c = combines[static_cast<std::size_t>(id - n)];
      stack.push_back({c.left, bag});
      stack.push_back({c.right, c.is_sum ? bag : static_cast<std::uint8_t>(1 - bag)});
    }
  }
  out.feasible = out.best_difference <= problem.threshold;
  out.stats.nodes = steps;
  return out;
}

PartitionOutcome ckk_decide(const PartitionProblem& problem) {
  check_numbers(problem.numbers);
  return CkkSearch(problem.numbers, problem.threshold).run();
}

std::int64_t brute_force_partition(const std::vector<std::int64_t>& numbers) {
  check_numbers(numbers);
  if (numbers.size() > 24) {
    throw std::invalid_argument("brute_force_partition: input exceeds 24 elements");
  }
  if (numbers.empty()) return 0;

  std::int64_t diff = 0;
  for (std::int64_t v : numbers) diff += v;  // start with everything in bag 0
  std::int64_t best = diff;

  // Element 0 stays in bag 0 (complements are equivalent); Gray-walk the rest
  // so each step moves a single element across.
  const unsigned rest = static_cast<unsigned>(numbers.size()) - 1;
  std::uint32_t gray = 0;
  for (std::uint32_t i = 1; i < (1u << rest); ++i) {
    const std::uint32_t next = i ^ (i >> 1);
    const std::uint32_t flipped = next ^ gray;
    const int idx = std::countr_zero(flipped) + 1;
    diff += (next & flipped) ? -2 * numbers[static_cast<std::size_t>(idx)]
                             : 2 * numbers[static_cast<std::size_t>(idx)];
    gray = next;
    best = std::min(best, std::abs(diff));
  }
  return best;
}

}  // namespace vetomanip
