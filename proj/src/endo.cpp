#include "cotame/endo.hpp"

#include "cotame/errors.hpp"
#include "cotame/parse.hpp"

namespace cotame {

Endomorphism::Endomorphism(VarSpace space, std::vector<Polynomial> images)
    : space_(space), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != space_.slots()) {
    fail(ErrorKind::ArityMismatch, "endomorphism needs one image per variable");
  }
  for (const auto& img : images_) require_same_space(space_, img.space(), "endomorphism image");
}

Endomorphism Endomorphism::identity(VarSpace space) {
  std::vector<Polynomial> images;
  for (int slot = 0; slot < space.slots(); ++slot) images.push_back(Polynomial::var(space, slot));
  return Endomorphism(space, std::move(images));
}

Polynomial apply_endo(const Endomorphism& g, const Polynomial& p) {
  require_same_space(g.space(), p.space(), "apply_endo");
  return substitute(p, g.images());
}

Endomorphism compose(const Endomorphism& g, const Endomorphism& h) {
  require_same_space(g.space(), h.space(), "compose");
  std::vector<Polynomial> images;
  images.reserve(h.images().size());
  for (const auto& img : h.images()) images.push_back(apply_endo(g, img));
  return Endomorphism(g.space(), std::move(images));
}

bool endo_equal(const Endomorphism& g, const Endomorphism& h) {
  require_same_space(g.space(), h.space(), "endo_equal");
  return g == h;
}

std::optional<AffineForm> as_affine(const Endomorphism& g) {
  const auto slots = static_cast<std::size_t>(g.space().slots());
  AffineForm form{RationalMatrix(slots, slots), std::vector<Rational>(slots)};
  for (std::size_t j = 0; j < slots; ++j) {
    for (const auto& term : g.images()[j].terms()) {
      const std::uint32_t deg = term.mono.degree();
      if (deg > 1) return std::nullopt;
      if (deg == 0) {
        form.offset[j] = term.coeff;
        continue;
      }
      for (std::size_t i = 0; i < slots; ++i) {
        if (term.mono[static_cast<int>(i)] == 1) form.matrix(i, j) = term.coeff;
      }
    }
  }
  return form;
}

Endomorphism from_affine(VarSpace space, const AffineForm& form) {
  const auto slots = static_cast<std::size_t>(space.slots());
  if (form.matrix.rows() != slots || form.matrix.cols() != slots || form.offset.size() != slots) {
    fail(ErrorKind::ArityMismatch, "affine form does not match the ring");
  }
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < slots; ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < slots; ++i) {
      terms.push_back(Term{Monomial::unit(static_cast<int>(i)), form.matrix(i, j)});
    }
    terms.push_back(Term{Monomial{}, form.offset[j]});
    images.push_back(Polynomial::from_terms(space, std::move(terms)));
  }
  return Endomorphism(space, std::move(images));
}

bool is_triangular(const Endomorphism& g) {
  for (int s = 0; s < g.space().slots(); ++s) {
    const Monomial self = Monomial::unit(s);
    bool has_self = false;
    for (const auto& term : g.image(s).terms()) {
      if (term.mono == self) {
        has_self = true;
        continue;
      }
      for (int later = s; later < g.space().slots(); ++later) {
        if (term.mono[later] > 0) return false;
      }
    }
    if (!has_self) return false;
  }
  return true;
}

Endomorphism make_translation(std::span<const Rational> a) {
  const VarSpace space = VarSpace::plain(static_cast<int>(a.size()));
  space.validate();
  std::vector<Polynomial> images;
  for (int i = 1; i <= space.n; ++i) {
    images.push_back(Polynomial::x(space, i) + Polynomial::constant(space, a[static_cast<std::size_t>(i - 1)]));
  }
  return Endomorphism(space, std::move(images));
}

Endomorphism make_mu(const Rational& a, int n) {
  if (a.is_zero()) fail(ErrorKind::ZeroScalar, "mu requires a nonzero scalar");
  const VarSpace space = VarSpace::plain(n);
  space.validate();
  std::vector<Polynomial> images;
  for (int i = 1; i <= n; ++i) images.push_back(Polynomial::x(space, i) * a.pow(n - 2 * i + 1));
  return Endomorphism(space, std::move(images));
}

Endomorphism make_nu(const Rational& b, int n) {
  if (b.is_zero()) fail(ErrorKind::ZeroScalar, "nu requires a nonzero scalar");
  const VarSpace space = VarSpace::plain(n);
  space.validate();
  std::vector<Polynomial> images;
  for (int i = 1; i <= n; ++i) images.push_back(Polynomial::x(space, i) * b);
  return Endomorphism(space, std::move(images));
}

Endomorphism make_sigma(int n) {
  const VarSpace space = VarSpace::plain(n);
  space.validate();
  std::vector<Polynomial> images;
  for (int i = 1; i <= n; ++i) images.push_back(Polynomial::x(space, n - i + 1));
  return Endomorphism(space, std::move(images));
}

Endomorphism exp_endo(const Derivation& d, const Polynomial& coeff) {
  require_same_space(d.space(), coeff.space(), "exp_endo");
  if (!kernel_member(d, coeff)) fail(ErrorKind::NotInKernel, "coefficient " + format_poly(coeff) + " is not in ker D");
  const Derivation scaled = scale(d, coeff);
  std::vector<Polynomial> images;
  for (int slot = 0; slot < d.space().slots(); ++slot) {
    images.push_back(exp_apply(scaled, Polynomial::var(d.space(), slot)));
  }
  return Endomorphism(d.space(), std::move(images));
}

Polynomial substitution_pi(const Polynomial& p, const Polynomial& f) {
  if (!p.space().extended || f.space().extended || p.space().n != f.space().n) {
    fail(ErrorKind::SpaceMismatch, "pi maps k[t,x1..xn] to k[x1..xn]");
  }
  std::vector<Polynomial> images{f};
  for (int i = 1; i <= f.space().n; ++i) images.push_back(Polynomial::x(f.space(), i));
  return substitute(p, images);
}

Endomorphism lift_translation(std::span<const Rational> a, const Polynomial& f) {
  if (f.space().extended || static_cast<int>(a.size()) != f.space().n) {
    fail(ErrorKind::SpaceMismatch, "lift_translation needs f in k[x1..xn] and a in k^n");
  }
  const VarSpace lifted = VarSpace::lifted(f.space().n);
  const Polynomial shift = apply_endo(make_translation(a), f) - f;
  std::vector<Polynomial> images{Polynomial::t(lifted) + embed(shift, lifted)};
  for (int i = 1; i <= lifted.n; ++i) {
    images.push_back(Polynomial::x(lifted, i) + Polynomial::constant(lifted, a[static_cast<std::size_t>(i - 1)]));
  }
  return Endomorphism(lifted, std::move(images));
}

Endomorphism extend_fixing_t(const Endomorphism& g) {
  if (g.space().extended) fail(ErrorKind::SpaceMismatch, "map already acts on k[t,x]");
  const VarSpace lifted = VarSpace::lifted(g.space().n);
  std::vector<Polynomial> images{Polynomial::t(lifted)};
  for (const auto& img : g.images()) images.push_back(embed(img, lifted));
  return Endomorphism(lifted, std::move(images));
}

Endomorphism triangular_inverse(const Endomorphism& g) {
  if (!is_triangular(g)) fail(ErrorKind::NoInverseAvailable, "map is not triangular");
  const VarSpace space = g.space();
  const auto id = Endomorphism::identity(space);
  // Solve g(v_s) = a_s v_s + f_s(v_0..v_{s-1}) slot by slot; f_s never looks
  // at slots >= s, so those entries of `inverse` may still be placeholders.
  std::vector<Polynomial> inverse(id.images().begin(), id.images().end());
  for (int s = 0; s < space.slots(); ++s) {
    const Monomial self = Monomial::unit(s);
    const Rational a = g.image(s).coefficient(self);
    const Polynomial rest = g.image(s) - Polynomial::monomial(space, self, a);
    inverse[static_cast<std::size_t>(s)] = (id.image(s) - substitute(rest, inverse)) * a.inverse();
  }
  return Endomorphism(space, std::move(inverse));
}

Automorphism Automorphism::exponential(const Derivation& base, const Polynomial& coeff) {
  require_same_space(base.space(), coeff.space(), "exponential factor");
  if (!kernel_member(base, coeff)) {
    fail(ErrorKind::NotInKernel, "coefficient " + format_poly(coeff) + " is not in ker D");
  }
  Automorphism out(base.space());
  if (!coeff.is_zero()) out.factors_.push_back(ExpFactor{base, coeff});
  return out;
}

Automorphism Automorphism::from_pair(Endomorphism forward, Endomorphism inverse) {
  require_same_space(forward.space(), inverse.space(), "automorphism factor");
  Automorphism out(forward.space());
  out.factors_.push_back(MapFactor{std::move(forward), std::move(inverse)});
  return out;
}

Automorphism Automorphism::from_endomorphism(const Endomorphism& g) {
  if (auto form = as_affine(g)) {
    auto inv = form->matrix.inverse();
    if (!inv) fail(ErrorKind::NoInverseAvailable, "affine map has a singular matrix");
    // g(v) = v A + b  =>  g^{-1}(v) = (v - b) A^{-1}
    AffineForm inverse_form{*inv, std::vector<Rational>(form->offset.size())};
    for (std::size_t j = 0; j < form->offset.size(); ++j) {
      Rational acc(0);
      for (std::size_t i = 0; i < form->offset.size(); ++i) acc.add_mul(form->offset[i], (*inv)(i, j));
      inverse_form.offset[j] = -acc;
    }
    return from_pair(g, from_affine(g.space(), inverse_form));
  }
  if (is_triangular(g)) return from_pair(g, triangular_inverse(g));
  fail(ErrorKind::NoInverseAvailable, "no structured inverse for this map");
}

Automorphism Automorphism::inverse() const {
  Automorphism out(space_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (const auto* e = std::get_if<ExpFactor>(&*it)) {
      out.factors_.push_back(ExpFactor{e->base, -e->coeff});
    } else {
      const auto& m = std::get<MapFactor>(*it);
      out.factors_.push_back(MapFactor{m.inverse, m.forward});
    }
  }
  return out;
}

Polynomial Automorphism::apply(const Polynomial& p) const {
  require_same_space(space_, p.space(), "apply automorphism");
  Polynomial q = p;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (const auto* e = std::get_if<ExpFactor>(&*it)) {
      q = exp_apply_kernel(e->base, e->coeff, q);
    } else {
      q = apply_endo(std::get<MapFactor>(*it).forward, q);
    }
  }
  return q;
}

Endomorphism Automorphism::expand() const {
  std::vector<Polynomial> images;
  for (int slot = 0; slot < space_.slots(); ++slot) images.push_back(apply(Polynomial::var(space_, slot)));
  return Endomorphism(space_, std::move(images));
}

Automorphism Automorphism::then_apply(const Automorphism& other) const {
  require_same_space(space_, other.space_, "compose automorphisms");
  Automorphism out = *this;
  out.factors_.insert(out.factors_.end(), other.factors_.begin(), other.factors_.end());
  return out;
}

nlohmann::json endo_to_json(const Endomorphism& g) {
  nlohmann::json images = nlohmann::json::array();
  for (const auto& img : g.images()) images.push_back(format_poly(img));
  return nlohmann::json{{"n", g.space().n}, {"extended", g.space().extended}, {"images", images}};
}

}  // namespace cotame
