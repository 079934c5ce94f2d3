#ifndef DETKIT_INTMATRIX_HPP
#define DETKIT_INTMATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace detkit {

/// Dense matrix over arbitrary-precision integers, row-major.
/// All derived quantities (rank, determinants, normal forms) are exact;
/// eliminations are fraction-free throughout.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& o) const;
    std::vector<mpz_class> mul_vec(const std::vector<mpz_class>& v) const;

    /// Max absolute value over entries (0 for empty).
    mpz_class max_abs() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> e_;
};

namespace exactla {

/// Exact rank over the rationals, fraction-free Bareiss elimination.
std::size_t rank(const IntMatrix& a);

/// Determinant of a square matrix (Bareiss).
mpz_class det(const IntMatrix& a);

/// det(A A^T); requires rows <= cols.
mpz_class gram_det(const IntMatrix& a);

struct SmithResult {
    std::vector<mpz_class> invariants;  // d1 | d2 | ..., nonnegative
    IntMatrix u, v;                     // unimodular, u*A*v = diag(invariants)
};

SmithResult smith_normal_form(const IntMatrix& a);

/// gcd of all k x k minors = product of the first k invariant factors.
/// Throws domain_error when k exceeds the rank.
mpz_class determinantal_divisor(const IntMatrix& a, std::size_t k);

/// Saturated basis of the right integer kernel; each vector primitive,
/// pairwise size-reduced in max-norm. Obtained from column echelon form.
std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& a);

struct BvBound {
    mpz_class gram;        // det(A A^T)
    mpz_class divisor;     // D = determinantal divisor of order s
    mpq_class radicand;    // D^-2 * gram, reduced
    std::size_t exponent;  // r - s; the bound is radicand^(1/(2(r-s)))
    mpz_class ceiling;     // least integer B with B^(2(r-s)) >= radicand
    double approx;         // floating-point rendering of the root
};

/// Bombieri-Vaaler bound for an s x r system of full row rank, r > s.
BvBound bv_bound(const IntMatrix& a);

/// A nonzero primitive kernel vector of small max-norm: size-reduced basis
/// minimum, improved by exhaustive search over kernel-lattice coefficients
/// when the Bombieri-Vaaler box fits under `budget` combinations.
std::vector<mpz_class> small_kernel_vector(const IntMatrix& a,
                                           unsigned long budget = 2'000'000);

mpz_class max_abs(const std::vector<mpz_class>& v);

/// Column echelon form under unimodular column operations; pivot_rows[i] is
/// the row of the first nonzero entry of echelon column i, strictly
/// increasing.
struct ColumnEchelon {
    IntMatrix h;
    std::vector<std::size_t> pivot_rows;
};
ColumnEchelon column_echelon(const IntMatrix& a);

/// Reduces v against the column lattice of an echelon form (nearest-integer
/// multiples at each pivot). The residual is zero iff v lies in the lattice.
std::vector<mpz_class> reduce_mod_lattice(std::vector<mpz_class> v,
                                          const ColumnEchelon& ech);

}  // namespace exactla
}  // namespace detkit

#endif
