#include <benchmark/benchmark.h>

#include <random>

#include "finsep/grouplab.hpp"
#include "finsep/lrs.hpp"

using namespace finsep;

static void BM_FqMul(benchmark::State& state) {
    const FieldPtr f = Field::of_order(static_cast<std::uint64_t>(state.range(0)));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<fq_t> pick(0, f->q() - 1);
    std::vector<fq_t> xs(1024);
    for (auto& x : xs) x = pick(rng);
    fq_t acc = f->one();
    for (auto _ : state) {
        for (fq_t x : xs) acc = f->mul(acc, x == 0 ? f->one() : x);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FqMul)->Arg(7)->Arg(16)->Arg(81)->Arg(3125);

static void BM_IrreducibleSieve(benchmark::State& state) {
    const FieldPtr f = Field::of_order(static_cast<std::uint64_t>(state.range(0)));
    const auto d = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(monic_irreducibles_up_to(d, f));
}
BENCHMARK(BM_IrreducibleSieve)->Args({2, 12})->Args({3, 8})->Args({5, 6})->Unit(benchmark::kMillisecond);

static void BM_RabinTest(benchmark::State& state) {
    const FieldPtr f = Field::of_order(static_cast<std::uint64_t>(state.range(0)));
    const auto d = static_cast<unsigned>(state.range(1));
    std::mt19937_64 rng(3);
    std::vector<Poly> polys;
    std::uint64_t span = 1;
    for (unsigned i = 0; i < d && span < (1ull << 40); ++i) span *= f->q();
    std::uniform_int_distribution<std::uint64_t> pick(0, span - 1);
    for (int i = 0; i < 64; ++i) polys.push_back(monic_from_index(f, d, pick(rng)));
    for (auto _ : state)
        for (const auto& p : polys) benchmark::DoNotOptimize(is_irreducible(p));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(polys.size()));
}
BENCHMARK(BM_RabinTest)->Args({2, 32})->Args({3, 16})->Args({9, 8});

static void BM_FrobeniusIndexEval(benchmark::State& state) {
    const FieldPtr f = Field::of_order(3);
    const RationalFn zero(f), theta(Poly::theta(f)), one = RationalFn::constant(f, 1);
    const LrsSpec spec{{zero, theta}, {one, zero}, 1};
    const auto primes = enumerate_monic_irreducibles(static_cast<unsigned>(state.range(0)), f);
    std::vector<ResidueField> fields;
    for (std::size_t i = 0; i < primes.size() && i < 32; ++i) fields.push_back(ResidueField::trusted(primes[i]));
    for (auto _ : state)
        for (const auto& F : fields) benchmark::DoNotOptimize(eval_at_frobenius_index(spec, F));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fields.size()));
}
BENCHMARK(BM_FrobeniusIndexEval)->Arg(4)->Arg(8)->Arg(12);

static void BM_WreathBoundCheck(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const GroupTable g = n == 3 && state.range(2) ? GroupTable::symmetric(3) : GroupTable::cyclic(n);
    const auto subs = parse_stabilizers(g, "all");
    const auto r = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(wreath_bound_check(g, subs, r));
}
BENCHMARK(BM_WreathBoundCheck)->Args({2, 3, 0})->Args({3, 2, 0})->Args({3, 2, 1})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
