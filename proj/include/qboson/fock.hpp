#ifndef QBOSON_FOCK_HPP
#define QBOSON_FOCK_HPP

#include <stdexcept>

#include "qboson/qnum.hpp"
#include "qboson/state.hpp"

namespace qboson {

// Representation of the q-boson field algebra on finitely supported states.
// On an indicator state |lambda>:
//   beta_l     |lambda> = |lambda with one part l removed|   (0 if m_l = 0)
//   beta_star_l|lambda> = [m_l(lambda)+1] |lambda with one part l inserted>
//   num_op_l   |lambda> = q^{m_l(lambda)} |lambda>
// Equivalently, as pullbacks: (beta_l f)(mu) = f(mu with l inserted) and
// (beta_star_l f)(mu) = [m_l(mu)] f(mu with l deleted) when m_l(mu) > 0.
// beta_l on grade 0 is the zero map.

template <class Ctx>
StateFn<typename Ctx::value_t> beta(const Ctx&, int site,
                                    const StateFn<typename Ctx::value_t>& f) {
  StateFn<typename Ctx::value_t> out(f.grade() > 0 ? f.grade() - 1 : 0);
  if (f.grade() == 0) return out;
  for (const auto& [w, v] : f.support())
    if (w.multiplicity(site) > 0) out.add(w.deleted(site), v);
  return out;
}

template <class Ctx>
StateFn<typename Ctx::value_t> beta_star(
    const Ctx& ctx, int site, const StateFn<typename Ctx::value_t>& f) {
  StateFn<typename Ctx::value_t> out(f.grade() + 1);
  for (const auto& [w, v] : f.support())
    out.add(w.inserted(site), q_int(ctx, w.multiplicity(site) + 1) * v);
  return out;
}

template <class Ctx>
StateFn<typename Ctx::value_t> num_op(const Ctx& ctx, int site,
                                      const StateFn<typename Ctx::value_t>& f) {
  StateFn<typename Ctx::value_t> out(f.grade());
  for (const auto& [w, v] : f.support())
    out.add(w, q_pow(ctx, w.multiplicity(site)) * v);
  return out;
}

// a_l = beta_star_{l+1} beta_l moves one particle from site l to l+1;
// a_star_l = beta_{l+1} beta_star_l moves one from l+1 to l. Both preserve
// the particle number.
template <class Ctx>
StateFn<typename Ctx::value_t> hop(const Ctx& ctx, int site,
                                   const StateFn<typename Ctx::value_t>& f) {
  return beta_star(ctx, site + 1, beta(ctx, site, f));
}

template <class Ctx>
StateFn<typename Ctx::value_t> hop_star(
    const Ctx& ctx, int site, const StateFn<typename Ctx::value_t>& f) {
  return beta(ctx, site + 1, beta_star(ctx, site, f));
}

// delta_n(lambda) = 1 / prod_l [m_l(lambda)]!, the weight of the l^2 inner
// product on grade n.
template <class Ctx>
typename Ctx::real_t delta_n(const Ctx& ctx, const Weight& lambda) {
  return typename Ctx::real_t(1) / poincare_stabilizer(ctx, lambda);
}

// <f,g>_n = sum_lambda f(lambda) conj(g(lambda)) delta_n(lambda);
// conjugation is the identity in rational mode.
template <class Ctx>
typename Ctx::value_t inner_product(const Ctx& ctx,
                                    const StateFn<typename Ctx::value_t>& f,
                                    const StateFn<typename Ctx::value_t>& g) {
  if (f.grade() != g.grade())
    throw std::invalid_argument("inner_product: grade mismatch");
  typename Ctx::value_t out(0);
  for (const auto& [w, v] : f.support()) {
    auto gv = g.at(w);
    if (is_negligible(gv)) continue;
    out += v * conj_value(gv) * typename Ctx::value_t(delta_n(ctx, w));
  }
  return out;
}

}  // namespace qboson

#endif
