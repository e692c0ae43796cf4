#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

#include "weylthick/enumeration.hpp"
#include "weylthick/order.hpp"
#include "weylthick/thickening.hpp"

using namespace weylthick;

namespace {

const std::vector<std::string> kTypes = {"A2", "B3", "A4", "D4", "B4", "F4"};

std::shared_ptr<const WeylGroup> make_group(const std::string& name) {
  return WeylGroup::generate(std::make_shared<const RootSystem>(parse_system(name)));
}

std::shared_ptr<const OrderedOrbit> regular_orbit(const std::string& name) {
  const auto g = make_group(name);
  return OrderedOrbit::build(g, iota_invariant_center(g->root_system()));
}

void bm_group_generation(benchmark::State& state) {
  const auto& name = kTypes[static_cast<std::size_t>(state.range(0))];
  const auto rs = std::make_shared<const RootSystem>(parse_system(name));
  for (auto _ : state) benchmark::DoNotOptimize(WeylGroup::generate(rs));
  state.SetLabel(name);
}
BENCHMARK(bm_group_generation)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void bm_poset_build(benchmark::State& state) {
  const auto& name = kTypes[static_cast<std::size_t>(state.range(0))];
  const auto g = make_group(name);
  for (auto _ : state) benchmark::DoNotOptimize(OrderedOrbit::build(g, iota_invariant_center(g->root_system())));
  state.SetLabel(name);
}
BENCHMARK(bm_poset_build)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void bm_count_balanced(benchmark::State& state) {
  const auto& name = kTypes[static_cast<std::size_t>(state.range(0))];
  const auto o = regular_orbit(name);
  EnumerationOptions opts;
  opts.jobs = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_balanced(o, EnumerationMode::count, opts).count);
  state.SetLabel(name);
}
BENCHMARK(bm_count_balanced)->ArgsProduct({{0, 1, 2, 3, 4}, {1, 4}})->Unit(benchmark::kMillisecond);

void bm_list_balanced(benchmark::State& state) {
  const auto o = regular_orbit("B3");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_balanced(o, EnumerationMode::list).thickenings.size());
}
BENCHMARK(bm_list_balanced)->Unit(benchmark::kMicrosecond);

void bm_f4_count_budget(benchmark::State& state) {
  const auto o = regular_orbit("F4");
  EnumerationOptions opts;
  opts.budget = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_balanced(o, EnumerationMode::count, opts).nodes);
}
BENCHMARK(bm_f4_count_budget)->Arg(100000)->Unit(benchmark::kMillisecond);

void bm_metric_thickening(benchmark::State& state) {
  const auto o = regular_orbit("F4");
  const auto theta = iota_invariant_center(o->orbit().root_system());
  for (auto _ : state) benchmark::DoNotOptimize(metric_thickening(o, theta, Radius::exact(1, 2)).thickening.size());
}
BENCHMARK(bm_metric_thickening)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
