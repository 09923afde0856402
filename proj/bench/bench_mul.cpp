// Compares the serial reference, heap and OpenMP multiplication kernels on
// products that show up in the word computations.

#include <benchmark/benchmark.h>

#include "cotame/constructions.hpp"
#include "cotame/kernels.hpp"

namespace {

using namespace cotame;

/// Operands from phi(x_i) for n = 3 (small) and from a two-power word
/// image (large enough to cross the parallel threshold).
std::pair<Polynomial, Polynomial> operands(int which) {
  const Endomorphism phi = make_phi(3, 1, false);
  const Polynomial a = phi.image_x(1);
  if (which == 3) {
    const WordSpec w{{1, 1}, {{Rational(1), Rational(0), Rational(0)}}};
    const Endomorphism theta = evaluate_word(w, 3, 1, false);
    return {theta.image_x(1), theta.image_x(2)};
  }
  switch (which) {
    case 0:
      return {a, phi.image_x(2)};
    case 1:
      return {a * a, a};
    default: {
      const Polynomial sq = a * a;
      return {sq, sq};
    }
  }
}

template <std::vector<Term> (*Kernel)(std::span<const Term>, std::span<const Term>)>
void run_kernel(benchmark::State& state) {
  const auto [p, q] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = Kernel(p.terms(), q.terms());
    benchmark::DoNotOptimize(out);
  }
  state.counters["terms_p"] = static_cast<double>(p.terms().size());
  state.counters["terms_q"] = static_cast<double>(q.terms().size());
}

}  // namespace

BENCHMARK_TEMPLATE(run_kernel, kernels::mul_reference)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(run_kernel, kernels::mul_heap)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(run_kernel, kernels::mul_parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
