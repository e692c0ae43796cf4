#include "weylthick/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "weylthick/error.hpp"

namespace weylthick {

std::uint64_t default_budget_from_env() {
  const char* env = std::getenv("WEYLTHICK_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultNodeBudget;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const unsigned long long value = std::stoull(text, &used);
    if (used != text.size() || value == 0) throw std::invalid_argument("bad");
    return value;
  } catch (const std::logic_error&) {
    throw ParseError("WEYLTHICK_BUDGET must be a positive integer, got '" + std::string(env) + "'");
  }
}

namespace {

constexpr std::size_t kTargetTasks = 64;

struct BudgetExceeded {};

struct State {
  Bitset in;
  Bitset undecided;
};

class Engine {
 public:
  Engine(const OrderedOrbit& orbit, const EnumerationOptions& options)
      : orbit_(orbit), n_(orbit.size()), options_(options) {}

  const OrderedOrbit& orbit() const { return orbit_; }

  /// Applies the forced moves: every comparable pair keeps its lower point.
  State root() const {
    State s{Bitset(n_), Bitset(n_, true)};
    const auto& poset = orbit_.poset();
    for (std::size_t x = 0; x < n_; ++x) {
      const std::size_t y = orbit_.antipode(x);
      if (s.undecided.test(x) && x != y && poset.leq(x, y)) include(s, x);
    }
    return s;
  }

  void include(State& s, std::size_t x) const {
    const auto& poset = orbit_.poset();
    s.in |= poset.down_set(x);
    s.undecided.subtract(poset.down_set(x));
    s.undecided.subtract(poset.up_set(orbit_.antipode(x)));
  }

  std::pair<State, State> branch(const State& s, std::size_t x) const {
    State a = s;
    State b = s;
    include(a, x);
    include(b, orbit_.antipode(x));
    return {std::move(a), std::move(b)};
  }

  void tick() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > options_.budget) {
      aborted_.store(true, std::memory_order_relaxed);
      throw BudgetExceeded{};
    }
  }
  bool aborted() const { return aborted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }

  /// Depth-first, include-first; leaves arrive in lexicographic order.
  /// Returns false once the sink asked to stop.
  bool enumerate(const State& s, const std::function<bool(const Bitset&)>& emit) {
    const std::size_t x = s.undecided.find_first();
    if (x == Bitset::npos) return emit(s.in);
    tick();
    auto [a, b] = branch(s, x);
    if (!enumerate(a, emit)) return false;
    return enumerate(b, emit);
  }

  /// Restricts the poset to the undecided points of the root; COUNT works in
  /// these local indices so cached keys stay short.
  void prepare_count(const Bitset& root_undecided) {
    const auto& poset = orbit_.poset();
    global_ = root_undecided.indices();
    const std::size_t m = global_.size();
    std::vector<std::size_t> local(n_, Bitset::npos);
    for (std::size_t i = 0; i < m; ++i) local[global_[i]] = i;
    anti_.resize(m);
    down_.assign(m, Bitset(m));
    up_.assign(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i) {
      anti_[i] = local[orbit_.antipode(global_[i])];
      (poset.down_set(global_[i]) & root_undecided).for_each([&](std::size_t j) { down_[i].set(local[j]); });
      (poset.up_set(global_[i]) & root_undecided).for_each([&](std::size_t j) { up_[i].set(local[j]); });
    }
    local_ = std::move(local);
  }

  mpz_class count(const Bitset& undecided) {
    Bitset u(global_.size());
    undecided.for_each([&](std::size_t x) { u.set(local_[x]); });
    return count_local(u);
  }

 private:
  mpz_class count_local(const Bitset& undecided) {
    if (undecided.none()) return 1;
    mpz_class total = 1;
    for (const auto& comp : components(undecided)) {
      total *= count_component(comp);
      if (total == 0) break;
    }
    return total;
  }

  std::vector<Bitset> components(Bitset rest) const {
    std::vector<Bitset> out;
    const std::size_t m = global_.size();
    while (rest.any()) {
      const std::size_t s = rest.find_first();
      Bitset comp(m);
      comp.set(s);
      comp.set(anti_[s]);
      rest.subtract(comp);
      Bitset frontier = comp;
      while (frontier.any()) {
        Bitset reach(m);
        frontier.for_each([&](std::size_t y) {
          reach |= down_[y];
          reach |= up_[y];
        });
        reach &= rest;
        reach.for_each([&](std::size_t y) { reach.set(anti_[y]); });
        rest.subtract(reach);
        comp |= reach;
        frontier = std::move(reach);
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  mpz_class count_component(const Bitset& comp) {
    const bool cacheable = comp.count() <= options_.memo_threshold;
    if (cacheable) {
      std::lock_guard lock(cache_mutex_);
      auto it = cache_.find(comp);
      if (it != cache_.end()) return it->second;
    }
    tick();
    const std::size_t x = comp.find_first();
    const std::size_t y = anti_[x];
    Bitset a = comp;
    a.subtract(down_[x]);
    a.subtract(up_[y]);
    Bitset b = comp;
    b.subtract(down_[y]);
    b.subtract(up_[x]);
    mpz_class result = count_local(a) + count_local(b);
    if (cacheable) {
      std::lock_guard lock(cache_mutex_);
      if (cache_.size() < options_.memo_capacity) cache_.emplace(comp, result);
    }
    return result;
  }

  const OrderedOrbit& orbit_;
  std::size_t n_;
  EnumerationOptions options_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
  std::mutex cache_mutex_;
  std::unordered_map<Bitset, mpz_class, BitsetHash> cache_;
  std::vector<std::size_t> global_;
  std::vector<std::size_t> local_;
  std::vector<std::size_t> anti_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
};

/// Splits the root breadth-first into at most kTargetTasks subproblems,
/// preserving lexicographic order of their solution sets.
std::vector<State> split_tasks(Engine& engine, State root) {
  std::vector<State> tasks;
  tasks.push_back(std::move(root));
  while (tasks.size() < kTargetTasks) {
    std::vector<State> next;
    bool expanded = false;
    for (auto& t : tasks) {
      const std::size_t x = t.undecided.find_first();
      if (x == Bitset::npos) {
        next.push_back(std::move(t));
        continue;
      }
      engine.tick();
      auto [a, b] = engine.branch(t, x);
      next.push_back(std::move(a));
      next.push_back(std::move(b));
      expanded = true;
    }
    tasks = std::move(next);
    if (!expanded) break;
  }
  return tasks;
}

template <class F>
void run_pool(std::size_t jobs, std::size_t count, F&& work) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t j = 0; j < jobs; ++j) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

EnumerationResult enumerate_balanced(const std::shared_ptr<const OrderedOrbit>& orbit, EnumerationMode mode,
                                     const EnumerationOptions& options, const BalancedSink& sink) {
  EnumerationResult result;
  if (auto fp = orbit->antipode_fixed_point()) {
    result.fixed_point = fp;
    return result;
  }
  Engine engine(*orbit, options);
  State root = engine.root();

  if (mode == EnumerationMode::stream) {
    try {
      engine.enumerate(root, [&](const Bitset& in) {
        ++result.count;
        if (!sink || sink(in)) return true;
        result.complete = false;
        return false;
      });
    } catch (const BudgetExceeded&) {
      result.complete = false;
    }
    result.nodes = engine.nodes();
    return result;
  }

  if (mode == EnumerationMode::count) engine.prepare_count(root.undecided);
  std::vector<State> tasks;
  try {
    tasks = split_tasks(engine, std::move(root));
  } catch (const BudgetExceeded&) {
    result.complete = false;
    result.nodes = engine.nodes();
    return result;
  }

  std::vector<mpz_class> counts(tasks.size());
  std::vector<std::vector<Bitset>> lists(tasks.size());
  std::vector<char> done(tasks.size(), 0);
  run_pool(options.jobs, tasks.size(), [&](std::size_t i) {
    if (engine.aborted()) return;
    try {
      if (mode == EnumerationMode::count) {
        counts[i] = engine.count(tasks[i].undecided);
      } else {
        engine.enumerate(tasks[i], [&](const Bitset& in) {
          lists[i].push_back(in);
          return true;
        });
        counts[i] = static_cast<unsigned long>(lists[i].size());
      }
      done[i] = 1;
    } catch (const BudgetExceeded&) {
    }
  });

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!done[i]) {
      result.complete = false;
      continue;
    }
    result.count += counts[i];
    if (mode == EnumerationMode::list) {
      for (auto& b : lists[i]) result.thickenings.push_back(std::move(b));
    }
  }
  if (mode == EnumerationMode::list) std::sort(result.thickenings.begin(), result.thickenings.end(), lex_less);
  result.nodes = engine.nodes();
  return result;
}

ExistenceReport existence_report(const std::shared_ptr<const WeylGroup>& group, const EnumerationOptions& options) {
  const auto& rs = group->root_system();
  ExistenceReport report;
  report.system = rs.name();
  report.w0_is_minus_identity = is_minus_identity(rs, longest_element(*group));

  std::vector<std::pair<std::string, TypePoint>> bases;
  bases.emplace_back("regular", iota_invariant_center(rs));
  for (std::size_t i = 0; i < rs.rank(); ++i) bases.emplace_back("vertex:" + std::to_string(i + 1), fundamental_vertex(rs, i));

  for (auto& [label, base] : bases) {
    auto ordered = OrderedOrbit::build(group, base);
    OrbitExistence row;
    row.label = label;
    row.orbit_size = ordered->size();
    const auto counted = enumerate_balanced(ordered, EnumerationMode::count, options);
    row.fixed_point = counted.fixed_point;
    row.count = counted.count;
    row.count_complete = counted.complete;
    if (counted.complete) {
      row.exists = counted.count > 0;
    } else {
      EnumerationOptions first = options;
      first.budget = std::max<std::uint64_t>(options.budget, 4 * ordered->size());
      const auto found = enumerate_balanced(ordered, EnumerationMode::stream, first, [](const Bitset&) { return false; });
      row.exists = found.count > 0;
      if (row.exists && row.count == 0) row.count = 1;
    }
    const bool required = label == "regular" || report.w0_is_minus_identity;
    if (required && !row.exists) report.failures.push_back(label + ": no balanced thickening found");
    report.orbits.push_back(std::move(row));
  }
  return report;
}

}  // namespace weylthick
