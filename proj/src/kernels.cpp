#include "cotame/kernels.hpp"

#include <algorithm>
#include <map>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cotame::kernels {

std::vector<Term> mul_reference(std::span<const Term> p, std::span<const Term> q) {
  std::map<Monomial, Rational, std::greater<>> acc;
  for (const auto& a : p) {
    for (const auto& b : q) acc[a.mono * b.mono] += a.coeff * b.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
  }
  return out;
}

std::vector<Term> merge_add(std::span<const Term> p, std::span<const Term> q) {
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() && j < q.size()) {
    if (p[i].mono > q[j].mono) {
      out.push_back(p[i++]);
    } else if (q[j].mono > p[i].mono) {
      out.push_back(q[j++]);
    } else {
      Rational c = p[i].coeff + q[j].coeff;
      if (!c.is_zero()) out.push_back(Term{p[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
  out.insert(out.end(), q.begin() + static_cast<std::ptrdiff_t>(j), q.end());
  return out;
}

namespace {

// One stream per term of `small`, walking `big` in order. Lex is a monomial
// order, so each stream is already descending.
struct Stream {
  Monomial head;
  std::size_t big_index;
  std::size_t small_index;
};

struct StreamLess {
  bool operator()(const Stream& a, const Stream& b) const { return a.head < b.head; }
};

std::vector<Term> heap_merge(std::span<const Term> big, std::span<const Term> small) {
  std::vector<Term> out;
  if (big.empty() || small.empty()) return out;
  if (small.size() == 1) {
    out.reserve(big.size());
    for (const auto& b : big) out.push_back(Term{b.mono * small[0].mono, b.coeff * small[0].coeff});
    return out;
  }
  std::priority_queue<Stream, std::vector<Stream>, StreamLess> heap;
  for (std::size_t j = 0; j < small.size(); ++j) {
    heap.push(Stream{big[0].mono * small[j].mono, 0, j});
  }
  out.reserve(big.size() * 2);
  while (!heap.empty()) {
    Stream s = heap.top();
    heap.pop();
    if (out.empty() || out.back().mono != s.head) {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(Term{s.head, Rational(0)});
    }
    out.back().coeff.add_mul(big[s.big_index].coeff, small[s.small_index].coeff);
    if (++s.big_index < big.size()) {
      s.head = big[s.big_index].mono * small[s.small_index].mono;
      heap.push(s);
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

}  // namespace

std::vector<Term> mul_heap(std::span<const Term> p, std::span<const Term> q) {
  return p.size() >= q.size() ? heap_merge(p, q) : heap_merge(q, p);
}

std::vector<Term> mul_parallel(std::span<const Term> p, std::span<const Term> q) {
  std::span<const Term> big = p.size() >= q.size() ? p : q;
  std::span<const Term> small = p.size() >= q.size() ? q : p;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (threads <= 1 || small.size() < 4 || big.size() * small.size() < kParallelWorkThreshold) {
    return heap_merge(big, small);
  }
  const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(threads), small.size() / 2);
  std::vector<std::vector<Term>> partial(chunks);
  const auto count = static_cast<std::ptrdiff_t>(chunks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    const std::size_t lo = small.size() * static_cast<std::size_t>(c) / chunks;
    const std::size_t hi = small.size() * static_cast<std::size_t>(c + 1) / chunks;
    partial[static_cast<std::size_t>(c)] = heap_merge(big, small.subspan(lo, hi - lo));
  }
  // Pairwise tree reduction keeps the merge cost at O(N log chunks).
  for (std::size_t stride = 1; stride < chunks; stride *= 2) {
    const auto pairs = static_cast<std::ptrdiff_t>((chunks + 2 * stride - 1) / (2 * stride));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < pairs; ++k) {
      const std::size_t a = static_cast<std::size_t>(k) * 2 * stride;
      const std::size_t b = a + stride;
      if (b < chunks) {
        partial[a] = merge_add(partial[a], partial[b]);
        partial[b].clear();
      }
    }
  }
  return std::move(partial[0]);
}

}  // namespace cotame::kernels
