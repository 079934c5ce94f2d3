#ifndef DETKIT_DETMETHOD_HPP
#define DETKIT_DETMETHOD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "detkit/constants.hpp"
#include "detkit/form.hpp"
#include "detkit/gf.hpp"
#include "detkit/intmatrix.hpp"
#include "detkit/point.hpp"

namespace detkit {
namespace detmethod {

/// Ordered list of the homogeneous monomials of one degree,
/// RTL-lex descending. Count = binomial(degree + nvars - 1, nvars - 1).
struct MonomialBasis {
    int degree = 0;
    std::size_t nvars = 0;
    std::vector<Exponents> monomials;

    std::size_t size() const { return monomials.size(); }
};

MonomialBasis monomial_basis(int degree, std::size_t nvars);

/// Rows = points, cols = basis monomials, entry = monomial value at the
/// point's canonical representative.
IntMatrix eval_matrix(const std::vector<ProjPoint>& pts, const MonomialBasis& basis);

/// Greedy scan in the given order, keeping a point iff it raises the rank of
/// the evaluation matrix. Deterministic; returns (tuple, s = final rank).
struct IndependentSelection {
    std::vector<ProjPoint> tuple;
    std::size_t rank = 0;
};
IndependentSelection select_independent(const std::vector<ProjPoint>& pts,
                                        const MonomialBasis& basis);

struct Cluster {
    std::vector<std::uint32_t> residue;   // canonical point mod p
    std::vector<std::size_t> members;     // indices into the tuple
    bool smooth = false;
};

struct PrimeReport {
    std::uint32_t p = 0;
    bool is_bad = false;
    std::vector<Cluster> clusters;
    long guaranteed_valuation = 0;              // sum m(m-1)/2 over smooth clusters
    std::optional<long> observed_valuation;     // absent when the determinant is 0
    mpz_class delta;
};

/// Groups a point tuple by reduction mod p and computes the guaranteed
/// p-adic valuation sum over smooth clusters (curve specialization, nvars=3).
/// All points must lie on f. Fills everything but the observed valuation.
PrimeReport cluster_valuation_bound(const std::vector<ProjPoint>& tuple,
                                    std::uint32_t p, const Form& f);

/// Determinant of (F_i(xi_j))_{ij} and its p-adic valuation; the valuation is
/// absent (infinite) when the determinant vanishes.
struct DetValuation {
    mpz_class delta;
    std::optional<long> valuation;
};
DetValuation vp_of_det(const std::vector<Form>& fs,
                       const std::vector<ProjPoint>& tuple, std::uint32_t p);

/// Primes p <= pmax where the reduction of f is not absolutely irreducible,
/// plus the product of those primes for the empirical norm comparison.
struct BadPrimes {
    std::vector<std::uint32_t> primes;
    mpz_class product = 1;
    mpz_class norm_f;
};
BadPrimes bad_primes(const Form& f, std::uint32_t pmax,
                     const forms::IrreducibilityOptions& opts = {});

/// (sum_{p<=x} log p / p, sum_{p<=x} log p), primes by sieve.
struct MertensSums {
    double log_over_p = 0.0;
    double chebyshev = 0.0;
};
MertensSums mertens_sums(double x);

std::vector<std::uint32_t> primes_up_to(std::uint64_t x);

/// Valuation lower-bound calculator:
/// n!^{1/n} * n/(n+1) * s^{1+1/n} / (p + c_sqrt*sqrt(p)) + c_lin*s.
double salberger_lower_bound(double s, double p, int d, int n,
                             const BoundConstants& c);

/// log|Delta| lower-bound calculator:
/// n!^{1/n}/(n+1) * s^{1+1/n} * (log s + c_sal2 - n*max(log log||f||, 0)).
double sal2_lower_bound(double s, const mpz_class& normf, int d, int n,
                        const BoundConstants& c);

}  // namespace detmethod
}  // namespace detkit

#endif
