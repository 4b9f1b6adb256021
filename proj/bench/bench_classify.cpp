// Serial reference vs OpenMP kernels on the synthetic corpus.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "sublang/classify.hpp"
#include "sublang/ranking.hpp"
#include "sublang/synthetic.hpp"

namespace {

using namespace sublang;

struct Fixture {
  std::vector<Document> docs;
  FrequencyModel model;
};

Fixture make_fixture(std::size_t docs_per_discipline) {
  SyntheticConfig cfg;
  cfg.docs_per_discipline = docs_per_discipline;
  std::vector<Document> docs;
  for (const auto& r : generate_corpus(cfg)) docs.push_back(to_document(r));
  auto model = build_model(docs, StopwordList{}, FieldMode::Both, cfg.disciplines);
  return {std::move(docs), std::move(model)};
}

const Fixture& fixture(std::size_t docs_per_discipline) {
  static const Fixture small = make_fixture(50);
  static const Fixture large = make_fixture(400);
  return docs_per_discipline == 50 ? small : large;
}

template <bool Parallel>
void BM_classify_all(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
  const ClassifyOptions opts;
  for (auto _ : state) {
    auto r = Parallel ? classify_all(f.model, f.docs, opts) : serial::classify_all(f.model, f.docs, opts);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.docs.size()));
}

template <bool Parallel>
void BM_rank_terms(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& label : f.model.disciplines()) {
      auto r = Parallel ? rank_terms(f.model, label) : serial::rank_terms(f.model, label);
      benchmark::DoNotOptimize(r);
    }
  }
}

}  // namespace

BENCHMARK(BM_classify_all<false>)->Name("classify_all/serial")->Arg(50)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_classify_all<true>)->Name("classify_all/openmp")->Arg(50)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_terms<false>)->Name("rank_terms/serial")->Arg(50)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_terms<true>)->Name("rank_terms/openmp")->Arg(50)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
