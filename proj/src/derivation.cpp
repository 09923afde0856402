#include "cotame/derivation.hpp"

#include <algorithm>

#include "cotame/errors.hpp"

namespace cotame {

Derivation::Derivation(VarSpace space, std::vector<Polynomial> images)
    : space_(space), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != space_.slots()) {
    fail(ErrorKind::ArityMismatch, "derivation needs one image per variable");
  }
  for (const auto& img : images_) require_same_space(space_, img.space(), "derivation image");
}

Derivation Derivation::zero(VarSpace space) {
  return Derivation(space, std::vector<Polynomial>(static_cast<std::size_t>(space.slots()), Polynomial(space)));
}

Polynomial apply(const Derivation& d, const Polynomial& p) {
  require_same_space(d.space(), p.space(), "apply derivation");
  Polynomial out(p.space());
  for (int slot = 0; slot < d.space().slots(); ++slot) {
    const Polynomial& img = d.image(slot);
    if (img.is_zero() || p.degree_in(slot) == 0) continue;
    out += derivative(p, slot) * img;
  }
  return out;
}

Polynomial power_apply(const Derivation& d, std::uint32_t k, const Polynomial& p) {
  require_same_space(d.space(), p.space(), "power_apply");
  Polynomial q = p;
  for (std::uint32_t i = 0; i < k && !q.is_zero(); ++i) q = apply(d, q);
  return q;
}

bool kernel_member(const Derivation& d, const Polynomial& p) { return apply(d, p).is_zero(); }

Derivation scale(const Derivation& d, const Polynomial& p) {
  require_same_space(d.space(), p.space(), "scale");
  std::vector<Polynomial> images;
  images.reserve(d.images().size());
  for (const auto& img : d.images()) images.push_back(img * p);
  return Derivation(d.space(), std::move(images));
}

std::uint64_t default_exp_cap(const Derivation& d, const Polynomial& p) {
  std::uint64_t image_degree = 0;
  for (const auto& img : d.images()) {
    if (!img.is_zero()) image_degree = std::max<std::uint64_t>(image_degree, total_degree(img));
  }
  const std::uint64_t p_degree = p.is_zero() ? 0 : total_degree(p);
  return (static_cast<std::uint64_t>(d.space().slots()) + 1) * (1 + p_degree) * (1 + image_degree);
}

Polynomial exp_apply(const Derivation& d, const Polynomial& p, std::uint64_t cap) {
  require_same_space(d.space(), p.space(), "exp_apply");
  Polynomial sum = p;
  Polynomial power = p;
  for (std::uint64_t k = 1; !power.is_zero(); ++k) {
    if (k > cap) fail(ErrorKind::ExpDiverged, "exp series did not terminate within " + std::to_string(cap) + " steps");
    power = apply(d, power);
    power *= Rational(1, static_cast<long long>(k));
    sum += power;
  }
  return sum;
}

Polynomial exp_apply(const Derivation& d, const Polynomial& p) {
  return exp_apply(d, p, default_exp_cap(d, p));
}

Polynomial exp_apply_kernel(const Derivation& d, const Polynomial& coeff, const Polynomial& p) {
  require_same_space(d.space(), p.space(), "exp_apply_kernel");
  require_same_space(d.space(), coeff.space(), "exp_apply_kernel");
  if (coeff.is_zero() || p.is_zero()) return p;
  std::uint64_t image_degree = 0;
  for (const auto& img : d.images()) {
    if (!img.is_zero()) image_degree = std::max<std::uint64_t>(image_degree, total_degree(img));
  }
  const std::uint64_t cap = (static_cast<std::uint64_t>(d.space().slots()) + 1) * (1 + total_degree(p)) *
                            (1 + image_degree + total_degree(coeff));

  if (coeff.size() == 1) {
    // Monomial coefficient: accumulate forward, no need to keep D^k(p).
    const Term c = coeff.terms().front();
    Polynomial sum = p;
    Polynomial power = p;
    Monomial shift;
    Rational scale(1);
    for (std::uint64_t k = 1;; ++k) {
      power = apply(d, power);
      if (power.is_zero()) break;
      if (k > cap) fail(ErrorKind::ExpDiverged, "exp series did not terminate");
      power *= Rational(1, static_cast<long long>(k));
      shift = shift * c.mono;
      scale *= c.coeff;
      sum += mul_monomial(power, shift, scale);
    }
    return sum;
  }

  // General coefficient: Horner in coeff over the stored D^k(p)/k!.
  std::vector<Polynomial> series{p};
  for (std::uint64_t k = 1;; ++k) {
    Polynomial next = apply(d, series.back());
    if (next.is_zero()) break;
    if (k > cap) fail(ErrorKind::ExpDiverged, "exp series did not terminate");
    next *= Rational(1, static_cast<long long>(k));
    series.push_back(std::move(next));
  }
  Polynomial acc = std::move(series.back());
  series.pop_back();
  while (!series.empty()) {
    acc = acc * coeff + series.back();
    series.pop_back();
  }
  return acc;
}

std::optional<std::vector<int>> triangular_certificate(const Derivation& d) {
  const int slots = d.space().slots();
  // depends[v][u]: u occurs in D(v).
  std::vector<std::vector<bool>> depends(static_cast<std::size_t>(slots),
                                         std::vector<bool>(static_cast<std::size_t>(slots), false));
  for (int v = 0; v < slots; ++v) {
    for (int u = 0; u < slots; ++u) depends[v][u] = d.image(v).degree_in(u) > 0;
  }
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(slots), false);
  while (static_cast<int>(order.size()) < slots) {
    int pick = -1;
    for (int v = 0; v < slots && pick < 0; ++v) {
      if (placed[v]) continue;
      bool ready = true;
      for (int u = 0; u < slots; ++u) {
        if (depends[v][u] && !placed[u]) {
          ready = false;
          break;
        }
      }
      if (ready) pick = v;
    }
    if (pick < 0) return std::nullopt;
    placed[pick] = true;
    order.push_back(pick);
  }
  return order;
}

}  // namespace cotame
