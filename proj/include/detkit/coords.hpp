#ifndef DETKIT_COORDS_HPP
#define DETKIT_COORDS_HPP

#include <vector>

#include "detkit/constants.hpp"
#include "detkit/form.hpp"
#include "detkit/intmatrix.hpp"

namespace detkit {
namespace coords {

struct LargeValueTuple {
    std::vector<long long> tuple;  // (a_0, ..., a_n, 1)
    mpz_class value;               // |f(a)|
    mpq_class ratio;               // |f(a)| / ||f||
};

/// Scans tuples (a_0..a_n, 1) with |a_i| <= R for each radius R in the
/// schedule; at the first radius with a nonzero value, returns the maximizing
/// tuple (ties broken lexicographically). The schedule is extended by
/// doubling if exhausted, which a nonzero form always escapes.
LargeValueTuple find_large_value_tuple(const Form& f,
                                       std::vector<long long> schedule);

/// Identity plus (a_0..a_n, 0) in the last column; determinant 1. The last
/// entry of `a` must be 1.
IntMatrix build_shear(const std::vector<long long>& a, std::size_t nvars);

/// Inverse of a build_shear matrix: identity minus the same column.
IntMatrix shear_inverse(const IntMatrix& a);

/// Upper bound on ||f o A|| / ||f||: #terms(f) * (max row abs sum of A)^deg.
mpz_class compose_norm_inflation_bound(const Form& f, const IntMatrix& a);

struct NormalizeCertificate {
    std::vector<long long> tuple;
    mpq_class ratio;          // |f(a)| / ||f||
    mpz_class norm_before;
    mpz_class norm_after;
    mpz_class c_after;        // coefficient of x_{nvars-1}^d in g
    bool primitive = false;
    mpq_class norm_ratio;     // ||g|| / ||f||, the two-sided comparison datum
    mpz_class inflation_bound;  // computed C(d, ||A||); norm_ratio <= this
};

struct NormalizeResult {
    Form g;
    IntMatrix a;
    NormalizeCertificate certificate;
};

/// Shear f so the pure last-variable coefficient is large: g = f o A with A
/// from find_large_value_tuple. When |c_f| already equals ||f|| the identity
/// is used.
NormalizeResult normalize(const Form& f, const BoundConstants& constants);

}  // namespace coords
}  // namespace detkit

#endif
