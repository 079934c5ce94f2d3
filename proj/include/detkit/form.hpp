#ifndef DETKIT_FORM_HPP
#define DETKIT_FORM_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detkit/intmatrix.hpp"

namespace detkit {

/// Exponent vector of a monomial; entries nonnegative, length = nvars.
using Exponents = std::vector<int>;

// gmpxx has no long long overloads; go through long (64-bit here)
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }
inline std::vector<mpz_class> to_mpz_vec(const std::vector<long long>& v) {
    std::vector<mpz_class> out;
    out.reserve(v.size());
    for (long long x : v) out.push_back(to_mpz(x));
    return out;
}

/// Right-to-left lexicographic comparison: the last variable is the most
/// significant. Returns <0, 0, >0 like strcmp.
int rtl_lex_cmp(const Exponents& a, const Exponents& b);

/// Orders exponent vectors RTL-lex descending, so map iteration starts at
/// the leading term.
struct RtlLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return rtl_lex_cmp(a, b) > 0;
    }
};

using TermMap = std::map<Exponents, mpz_class, RtlLexDesc>;

namespace forms {

/// Sparse homogeneous polynomial over the integers. Invariants: every
/// exponent vector sums to the degree, no zero coefficients, at least one
/// term. The zero polynomial is not representable; operations that could
/// produce it signal through optionals or exceptions instead.
class Form {
public:
    /// Builds from a term map, validating the invariants.
    Form(std::size_t nvars, TermMap terms);

    static Form parse(const std::string& text, std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }

    /// Max absolute coefficient.
    mpz_class norm() const;
    /// gcd of all coefficients.
    mpz_class content() const;
    bool is_primitive() const { return content() == 1; }
    Form primitivized() const;

    /// Coefficient of the given monomial, 0 when absent.
    mpz_class coefficient(const Exponents& e) const;
    /// Coefficient of x_{nvars-1}^degree (the monomial the normalization of
    /// coordinates targets).
    mpz_class last_var_coefficient() const;

    mpz_class evaluate(const std::vector<mpz_class>& point) const;
    mpz_class evaluate(const std::vector<long long>& point) const;

    /// d/dx_k evaluated at `point`, reduced mod m when m > 0.
    mpz_class partial_at(std::size_t k, const std::vector<long long>& point) const;

    /// Term with the RTL-lex greatest exponent vector.
    std::pair<Exponents, mpz_class> leading_term_rtl() const;

    Form multiply(const Form& g) const;
    /// Exact quotient h with other = (*this) * h when one exists over the
    /// rationals with integer coefficients; absent otherwise.
    std::optional<Form> divides(const Form& dividend) const;

    /// f composed with the linear substitution x -> A x; A must be square of
    /// size nvars with determinant +-1.
    Form compose_linear(const IntMatrix& a) const;

    bool operator==(const Form& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    /// Printer, RTL-lex descending term order; round-trips through parse.
    std::string to_string() const;

private:
    std::size_t nvars_;
    int degree_;
    TermMap terms_;
};

mpz_class evaluate_monomial(const Exponents& e, const std::vector<mpz_class>& point);

}  // namespace forms

using forms::Form;

}  // namespace detkit

#endif
