#ifndef DETKIT_TEST_UTIL_HPP
#define DETKIT_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "detkit/detmethod.hpp"
#include "detkit/form.hpp"
#include "detkit/intmatrix.hpp"

namespace detkit::testutil {

using Rng = std::mt19937_64;

// Random nonzero homogeneous form: up to max_terms monomials of the given
// degree with coefficients in [-coeff, coeff] \ {0}.
inline Form random_form(Rng& rng, std::size_t nvars, int degree, long coeff,
                        std::size_t max_terms) {
    auto basis = detmethod::monomial_basis(degree, nvars);
    std::uniform_int_distribution<long> cd(-coeff, coeff);
    std::uniform_int_distribution<std::size_t> md(0, basis.size() - 1);
    std::uniform_int_distribution<std::size_t> td(1, max_terms);
    while (true) {
        TermMap t;
        std::size_t k = td(rng);
        for (std::size_t i = 0; i < k; ++i) {
            long c = cd(rng);
            if (c == 0) continue;
            auto it = t.find(basis.monomials[md(rng)]);
            if (it == t.end())
                t.emplace(basis.monomials[md(rng)], mpz_class(c));
            else {
                it->second += c;
                if (it->second == 0) t.erase(it);
            }
        }
        if (!t.empty()) return Form(nvars, std::move(t));
    }
}

// As above, but forcing a nonzero coefficient at x_{nvars-1}^degree.
inline Form random_form_with_cf(Rng& rng, std::size_t nvars, int degree, long coeff,
                                std::size_t max_terms) {
    while (true) {
        Form f = random_form(rng, nvars, degree, coeff, max_terms);
        if (f.last_var_coefficient() != 0) return f;
    }
}

// Random unimodular matrix with entries in [-bound, bound], built from
// elementary shears and swaps with rejection on entry growth.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 2);
    while (true) {
        IntMatrix a = IntMatrix::identity(n);
        for (int step = 0; step < 6; ++step) {
            std::size_t i = idx(rng), j = idx(rng);
            if (i == j) continue;
            IntMatrix next = a;
            int kind = coin(rng);
            if (kind == 0) {  // row i += row j
                for (std::size_t c = 0; c < n; ++c) next(i, c) += a(j, c);
            } else if (kind == 1) {  // row i -= row j
                for (std::size_t c = 0; c < n; ++c) next(i, c) -= a(j, c);
            } else {  // swap rows
                for (std::size_t c = 0; c < n; ++c) {
                    next(i, c) = a(j, c);
                    next(j, c) = a(i, c);
                }
            }
            if (next.max_abs() <= bound) a = next;
        }
        if (a.max_abs() <= bound) return a;
    }
}

// Inverse of a 3x3 unimodular matrix via the adjugate.
inline IntMatrix inverse_unimodular3(const IntMatrix& a) {
    mpz_class d = exactla::det(a);
    IntMatrix inv(3, 3);
    inv(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) * d;
    inv(0, 1) = -(a(0, 1) * a(2, 2) - a(0, 2) * a(2, 1)) * d;
    inv(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) * d;
    inv(1, 0) = -(a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) * d;
    inv(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) * d;
    inv(1, 2) = -(a(0, 0) * a(1, 2) - a(0, 2) * a(1, 0)) * d;
    inv(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) * d;
    inv(2, 1) = -(a(0, 0) * a(2, 1) - a(0, 1) * a(2, 0)) * d;
    inv(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) * d;
    return inv;
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                               long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace detkit::testutil

#endif
