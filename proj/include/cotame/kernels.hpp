#pragma once

#include <span>
#include <vector>

#include "cotame/polynomial.hpp"

// Multiplication kernels behind cotame::mul. The reference kernel is the
// textbook accumulate-then-sort product and exists for testing; the heap
// kernel is Johnson's stream merge; the parallel kernel runs heap merges
// over chunks of the shorter operand under OpenMP and merges the partial
// products.
namespace cotame::kernels {

std::vector<Term> mul_reference(std::span<const Term> p, std::span<const Term> q);
std::vector<Term> mul_heap(std::span<const Term> p, std::span<const Term> q);
std::vector<Term> mul_parallel(std::span<const Term> p, std::span<const Term> q);

/// Merge of two canonical term lists (coefficient-wise sum).
std::vector<Term> merge_add(std::span<const Term> p, std::span<const Term> q);

/// Products with fewer estimated term pairs than this stay on one thread.
inline constexpr std::size_t kParallelWorkThreshold = 1 << 16;

}  // namespace cotame::kernels
