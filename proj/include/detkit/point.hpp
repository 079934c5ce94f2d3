#ifndef DETKIT_POINT_HPP
#define DETKIT_POINT_HPP

#include <cstdint>
#include <vector>

#include "detkit/form.hpp"

namespace detkit {
namespace points {

/// Primitive integer vector with canonical sign (first nonzero coordinate
/// positive); one representative per rational projective point.
class ProjPoint {
public:
    /// Canonicalizes an arbitrary nonzero integer vector: divides by the gcd
    /// and fixes the sign. Throws domain_error on the zero vector.
    static ProjPoint canonical(std::vector<long long> coords);

    const std::vector<long long>& coords() const { return c_; }
    std::size_t nvars() const { return c_.size(); }

    /// Naive height: max |coordinate| of the primitive representative.
    long long height() const;

    /// Canonical projective reduction mod p: componentwise residues scaled so
    /// the last nonzero coordinate is 1.
    std::vector<std::uint32_t> reduce_mod_p(std::uint32_t p) const;

    bool operator==(const ProjPoint&) const = default;
    /// Plain lexicographic order on coordinates (sorting/enumeration order).
    bool operator<(const ProjPoint& o) const { return c_ < o.c_; }

private:
    explicit ProjPoint(std::vector<long long> c) : c_(std::move(c)) {}
    std::vector<long long> c_;
};

struct EnumerateOptions {
    unsigned long long cell_budget = 1'000'000'000;  // box cells scanned at most
    unsigned threads = 1;
};

/// All canonical primitive zeros of f with height <= N, sorted
/// lexicographically. Exhaustive scan of the box [-N, N]^nvars; output is
/// independent of the thread count. Requires 3 <= nvars <= 4.
std::vector<ProjPoint> enumerate_points(const Form& f, long long n,
                                        const EnumerateOptions& opts = {});

/// True iff some partial derivative of f is nonzero at xi mod p. Requires
/// f(xi) = 0 mod p.
bool is_smooth_mod_p(const Form& f, const ProjPoint& xi, std::uint32_t p);

}  // namespace points

using points::ProjPoint;

}  // namespace detkit

#endif
