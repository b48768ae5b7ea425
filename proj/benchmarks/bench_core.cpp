#include "thf/dyadic.hpp"
#include "thf/families.hpp"
#include "thf/girth.hpp"
#include "thf/marking.hpp"
#include "thf/normal_form.hpp"
#include "thf/plmap.hpp"
#include "thf/witness.hpp"
#include "thf/word.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

thf::PLMap dense_map() {
    // a map with a few hundred breakpoints, from a longish word
    thf::Marking m = thf::Marking::standard(2);
    return m.evaluate(thf::Word::parse("abABaabbABAB").pow(8));
}

void BM_Compose(benchmark::State& state) {
    thf::PLMap f = dense_map();
    thf::PLMap g = f.inverse();
    for (auto _ : state) benchmark::DoNotOptimize(f.compose(g));
}
BENCHMARK(BM_Compose);

void BM_EvaluateWord(benchmark::State& state) {
    thf::Marking m = thf::Marking::standard(2);
    thf::Word w = thf::Word::parse("abABaabbABAB").pow(4);
    for (auto _ : state) benchmark::DoNotOptimize(m.evaluate(w));
}
BENCHMARK(BM_EvaluateWord);

void BM_FromPartitions(benchmark::State& state) {
    // a partition pair with mismatched refinements, 1 + 2^k pieces
    std::vector<thf::Dyadic> xs, ys;
    int k = static_cast<int>(state.range(0));
    for (int i = 0; i <= (1 << k); ++i) {
        xs.push_back(thf::Dyadic(i, k));
        ys.push_back(i == 0 ? thf::Dyadic(0) : thf::Dyadic(1, 1) + thf::Dyadic(i, k + 1));
    }
    for (auto _ : state) benchmark::DoNotOptimize(thf::PLMap::from_partitions(xs, ys));
}
BENCHMARK(BM_FromPartitions)->Arg(6)->Arg(9);

void BM_NormalFormRoundTrip(benchmark::State& state) {
    thf::PLMap f = dense_map();
    for (auto _ : state) {
        thf::NormalForm nf = thf::normal_form_of(f);
        benchmark::DoNotOptimize(thf::normal_form_to_word(nf));
    }
}
BENCHMARK(BM_NormalFormRoundTrip);

void BM_WitnessBatch(benchmark::State& state) {
    // the squeeze construction over every reduced 3-letter word of
    // length <= range(0)
    std::vector<thf::Word> words;
    thf::for_each_reduced(3, static_cast<int>(state.range(0)),
                          [&](const thf::Word& w) { words.push_back(w); });
    thf::Dyadic eps = thf::Dyadic::pow2(-6);
    for (auto _ : state) benchmark::DoNotOptimize(thf::construct_witnesses(words, eps, 3));
}
BENCHMARK(BM_WitnessBatch)->Arg(3)->Arg(4);

void BM_RelatorScan(benchmark::State& state) {
    thf::Marking m = thf::Marking::standard(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(thf::shortest_relator(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RelatorScan)->Arg(8)->Arg(10);

void BM_IsTrivialBall(benchmark::State& state) {
    // the inner loop of every ball comparison: triviality over all class
    // reps of length <= 5 on three letters
    thf::MarkingFamily fam = thf::family_xn();
    thf::Marking m = fam.at(6);
    for (auto _ : state) {
        int trivial = 0;
        thf::for_each_class_rep(3, 5, [&](const thf::Word& w) {
            if (m.is_trivial(w)) ++trivial;
        });
        benchmark::DoNotOptimize(trivial);
    }
}
BENCHMARK(BM_IsTrivialBall);

}  // namespace

BENCHMARK_MAIN();
