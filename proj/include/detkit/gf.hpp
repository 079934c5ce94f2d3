#ifndef DETKIT_GF_HPP
#define DETKIT_GF_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "detkit/form.hpp"

namespace detkit {
namespace forms {

/// Element of F_{p^k}, k <= 2, stored as c0 + c1*t with t a root of the
/// field's defining quadratic. For k = 1 always c1 = 0.
struct GFElem {
    std::uint32_t c0 = 0, c1 = 0;
    bool operator==(const GFElem&) const = default;
    bool is_zero() const { return c0 == 0 && c1 == 0; }
};

/// Arithmetic context for F_{p^k}, k in {1, 2}. The quadratic extension is
/// F_p[t]/(t^2 - r*t - s) with a monic irreducible found by search.
class GF {
public:
    GF(std::uint32_t p, unsigned k);

    std::uint32_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t size() const { return k_ == 1 ? p_ : std::uint64_t(p_) * p_; }

    GFElem zero() const { return {0, 0}; }
    GFElem one() const { return {1, 0}; }
    GFElem from_int(const mpz_class& v) const;
    /// i-th element in the fixed enumeration 0 .. size()-1.
    GFElem element(std::uint64_t i) const;

    GFElem add(GFElem a, GFElem b) const;
    GFElem sub(GFElem a, GFElem b) const;
    GFElem mul(GFElem a, GFElem b) const;
    GFElem neg(GFElem a) const;
    GFElem inv(GFElem a) const;

private:
    std::uint32_t p_;
    unsigned k_;
    std::uint32_t r_ = 0, s_ = 0;  // t^2 = r*t + s
};

/// Homogeneous form over F_{p^k}: nonzero coefficients only, RTL-lex order.
struct ModForm {
    std::size_t nvars = 0;
    int degree = 0;
    std::map<Exponents, GFElem, RtlLexDesc> terms;

    bool is_zero() const { return terms.empty(); }
};

/// Componentwise reduction of an integer form; throws domain_error when the
/// reduction vanishes (p divides the content).
ModForm reduce_mod_p(const Form& f, std::uint32_t p);

struct IrreducibilityOptions {
    unsigned max_extension = 2;          // test factors over F_{p^k}, k <= this
    unsigned long long budget = 10'000'000;  // cap on candidate factors per (k, e)
};

/// Exhaustive search for a nontrivial homogeneous factorization of f mod p
/// over F_{p^k} with factor degree <= degree/2. Returns true iff no factor is
/// found. Desk-scale only (degree <= 4, 3 variables, small p); throws
/// budget_error when the candidate count exceeds the budget.
bool is_abs_irreducible_mod_p(const Form& f, std::uint32_t p,
                              const IrreducibilityOptions& opts = {});

}  // namespace forms
}  // namespace detkit

#endif
