#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "record.hpp"

namespace bihom {

struct UnknownPresetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All preset names, sorted. Presets are constructed programmatically so the
/// index conventions can never drift from the code.
std::vector<std::string> catalog_names();

/// Builds the named preset; throws UnknownPresetError (whose message lists
/// all names) for unknown names.
Record catalog_get(const std::string& name);

/// Deterministic random structure candidate: sparse tensors (up to
/// `sparsity` nonzero entries each, values in -2..2). Not guaranteed valid.
struct RandomResult {
  Record record;
  bool passed;  // verdict of check_record on the candidate
};
RandomResult random_structure(const std::string& kind, int dim, std::uint64_t seed,
                              int sparsity = 3);
std::vector<std::string> random_kinds();

// --- reusable builders (also used heavily by the test suites) -------------

/// K[x]/(x^n) with identity structure maps. Unital, commutative.
BiHomAlgebra<R> make_kx(int n);

/// Dual coalgebra of K[x]/(x^n): divided powers, counital, identity maps.
BiHomCoalgebra<R> make_dual_kx(int n);

/// The canonical weight-lambda bialgebra on K[x]/(x^n):
/// Delta(a) = -lambda (a (x) 1) for `left`, -lambda (1 (x) a) otherwise.
InfBialgebra<R> make_canonical(int n, const R& lambda, bool left);

/// d/dx on K[x]/(x^n). Note this is NOT a derivation of the truncated ring
/// (D(x^n) leaves the ideal); it exists as a negative-test fixture.
Mat<R> make_ddx(int n);

/// The Euler operator x d/dx, a genuine derivation of K[x]/(x^n).
Mat<R> make_euler(int n);

/// diag(1, c, c^2, ...): the algebra endomorphism x -> c x of K[x]/(x^n).
Mat<R> make_scaling(int n, const R& c);

/// Example 2.9: M = A (x) A over a bialgebra, with gamma = mu (x) beta,
/// nu = alpha (x) mu, rho = Delta (x) psi, phi = omega (x) Delta and the
/// M-maps f (x) f.
HopfBimodule<R> make_example_29(const InfBialgebra<R>& B);

/// Regular bimodule (M = A, both actions mu, muM = mu).
BimoduleData<R> make_regular_bimodule(const BiHomAlgebra<R>& A);

/// Regular bicomodule (M = C, both coactions Delta, deltaM = Delta).
BicomoduleData<R> make_regular_bicomodule(const BiHomCoalgebra<R>& C);

/// r = 0 / 1 (x) 1 / x (x) x on K[x]/(x^n) as a dim x dim matrix.
Mat<R> make_r_zero(int n);
Mat<R> make_r_unit_unit(int n);
Mat<R> make_r_xx(int n);

}  // namespace bihom
