#ifndef QBOSON_CHECKS_HPP
#define QBOSON_CHECKS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qboson/hall_littlewood.hpp"
#include "qboson/hamiltonians.hpp"

namespace qboson::checks {

// Deterministic verification suites shared by the CLI `verify` command,
// the unit tests and the acceptance run. Exact-mode checks demand
// rational equality; float-mode checks carry a residual tolerance.

struct Config {
  int n_max = 4;
  int site_lo = -3, site_hi = 3;
  int trials = 50;
  std::uint64_t seed = 42;
  // fault-injection hook: corrupt one V coefficient inside the closed-form
  // action so the oracle-equivalence check must fail with a witness
  bool corrupt_v = false;
};

struct Result {
  std::string name;
  int cases = 0;
  int failures = 0;
  double max_residual = 0.0;  // float-mode checks only
  std::string witness;        // first failing case, serialized

  bool passed() const { return failures == 0; }
};

// deterministic helpers (shared with the tests)
int rand_int(std::mt19937_64& rng, int lo, int hi);
double rand_uniform(std::mt19937_64& rng, double lo, double hi);
Weight random_dominant(std::mt19937_64& rng, int n, int lo, int hi);
ExactState random_exact_state(std::mt19937_64& rng, int n, int lo, int hi,
                              int support_size = 4);
ComplexState random_complex_state(std::mt19937_64& rng, int n, int lo, int hi,
                                  int support_size = 4);
// random alcove point with pairwise gaps and wall distance >= min_gap
Vec random_spectral_point(std::mt19937_64& rng, int n, double min_gap = 0.25);

// field-algebra commutation relations on random states (exact equality)
Result check_algebra_relations(const ExactCtx& ctx, const Config& cfg);
// locality and quantum-Knuth relations of the hopping operators, with the
// mirrored relations for the starred side
Result check_plactic_relations(const ExactCtx& ctx, const Config& cfg);
// <beta*_l f, g> = <f, beta_l g> and <N_l f, g> = <f, N_l g>
Result check_representation_adjointness(const ExactCtx& ctx,
                                        const Config& cfg);
// norm bounds <beta f, beta f> <= <f,f>/(1-q) etc.
Result check_norm_bounds(const ExactCtx& ctx, const Config& cfg);

// closed form vs definitional oracle, both directions, r <= n <= n_max
Result check_oracle_equivalence(const ExactCtx& ctx, const Config& cfg);
// all pairwise commutators among {H_r, H*_r'} vanish
Result check_commutativity(const ExactCtx& ctx, const Config& cfg);
// <H_r f, g> = <f, H*_r g>
Result check_hierarchy_adjointness(const ExactCtx& ctx, const Config& cfg);
// H_r = 0 for r > n; H_n is the lattice translation
Result check_kernel_translation(const ExactCtx& ctx, const Config& cfg);
// restricted H*_r equals H_{n-r} composed with the inverse translation
Result check_raise_from_lower(const ExactCtx& ctx, const Config& cfg);
// delta_n(lambda - e_J) V_{lambda-e_J,J} = delta_n(lambda) V_{lambda,J^c}
Result check_gauge_identity(const ExactCtx& ctx, const Config& cfg);
// pair-product V against its q-binomial form on dominant shifts
Result check_v_binomial_form(const ExactCtx& ctx, const Config& cfg);
// H_q = H_1 + H_1^* and the creation-power closed form vs iterated hops
Result check_hq_and_creation_power(const ExactCtx& ctx, const Config& cfg);

// joint-eigenfunction identities of the Hall-Littlewood functions for the
// hierarchy, plus the q-boson energy 2 sum cos(xi_j); residuals are
// relative to 1 + |phi_xi(lambda)|
Result check_eigenvalue_identities(const FloatCtx& ctx, const Config& cfg,
                                   double tol = 1e-9);
// agreement of the two wave-function forms (gauge product vs alternating
// sum) at random points, n in {2, 3}
Result check_two_form_agreement(const FloatCtx& ctx, const Config& cfg,
                                double tol = 1e-10);

// the exact-mode suite in canonical order
std::vector<Result> run_exact_suite(const ExactCtx& ctx, const Config& cfg);
// the float-mode suite (eigenvalue identities, two-form agreement)
std::vector<Result> run_float_suite(const FloatCtx& ctx, const Config& cfg);

}  // namespace qboson::checks

#endif
