#include "detkit/intmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detkit/errors.hpp"

namespace detkit {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product: shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
        }
    return p;
}

std::vector<mpz_class> IntMatrix::mul_vec(const std::vector<mpz_class>& v) const {
    if (v.size() != cols_) throw domain_error("matrix-vector product: shape mismatch");
    std::vector<mpz_class> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

mpz_class IntMatrix::max_abs() const {
    mpz_class m = 0;
    for (const auto& x : e_)
        if (abs(x) > m) m = abs(x);
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j)
            os << (*this)(i, j) << (j + 1 < cols_ ? ", " : "");
        os << "]\n";
    }
    return os.str();
}

namespace exactla {

namespace {

// Fraction-free Bareiss elimination on a working copy; returns the rank and,
// for square full-rank input, leaves the determinant (up to the tracked sign)
// in the last pivot.
struct BareissState {
    IntMatrix w;
    std::size_t rank = 0;
    int sign = 1;
    mpz_class last_pivot = 1;
};

BareissState bareiss(const IntMatrix& a) {
    BareissState st{a};
    IntMatrix& w = st.w;
    const std::size_t m = w.rows(), n = w.cols();
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && w(piv, col) == 0) ++piv;
        if (piv == m) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < n; ++j) swap(w(row, j), w(piv, j));
            st.sign = -st.sign;
        }
        for (std::size_t i = row + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                mpz_class t = w(row, col) * w(i, j) - w(i, col) * w(row, j);
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, col) = 0;
        }
        prev = w(row, col);
        st.last_pivot = prev;
        ++row;
    }
    st.rank = row;
    return st;
}

}  // namespace

std::size_t rank(const IntMatrix& a) { return bareiss(a).rank; }

mpz_class det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw domain_error("det: matrix not square");
    if (a.rows() == 0) return 1;
    BareissState st = bareiss(a);
    if (st.rank < a.rows()) return 0;
    return st.sign * st.last_pivot;
}

mpz_class gram_det(const IntMatrix& a) {
    if (a.rows() > a.cols()) throw domain_error("gram_det: more rows than columns");
    return det(a.mul(a.transpose()));
}

SmithResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix w = a;
    IntMatrix u = IntMatrix::identity(m), v = IntMatrix::identity(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) swap(w(i, c), w(j, c));
        for (std::size_t c = 0; c < m; ++c) swap(u(i, c), u(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) swap(w(r, i), w(r, j));
        for (std::size_t r = 0; r < n; ++r) swap(v(r, i), v(r, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t c = 0; c < n; ++c) w(dst, c) += q * w(src, c);
        for (std::size_t c = 0; c < m; ++c) u(dst, c) += q * u(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t r = 0; r < m; ++r) w(r, dst) += q * w(r, src);
        for (std::size_t r = 0; r < n; ++r) v(r, dst) += q * v(r, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) w(i, c) = -w(i, c);
        for (std::size_t c = 0; c < m; ++c) u(i, c) = -u(i, c);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // locate a nonzero pivot of least absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (w(i, j) != 0 && (!found || abs(w(i, j)) < best)) {
                    best = abs(w(i, j));
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w(i, t).get_mpz_t(), w(t, t).get_mpz_t());
                add_row(i, t, -q);
                if (w(i, t) != 0) {  // remainder strictly smaller, promote it
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w(t, j).get_mpz_t(), w(t, t).get_mpz_t());
                add_col(j, t, -q);
                if (w(t, j) != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
        }

        // enforce the divisibility chain: fold in any entry the pivot misses
        bool redo = false;
        for (std::size_t i = t + 1; i < m && !redo; ++i)
            for (std::size_t j = t + 1; j < n && !redo; ++j)
                if (w(i, j) % w(t, t) != 0) {
                    add_row(t, i, 1);
                    redo = true;
                }
        if (redo) continue;

        if (w(t, t) < 0) negate_row(t);
        ++t;
    }

    SmithResult res;
    res.u = std::move(u);
    res.v = std::move(v);
    for (std::size_t i = 0; i < t; ++i) res.invariants.push_back(w(i, i));
    return res;
}

mpz_class determinantal_divisor(const IntMatrix& a, std::size_t k) {
    SmithResult snf = smith_normal_form(a);
    if (k == 0) return 1;
    if (k > snf.invariants.size())
        throw domain_error("determinantal_divisor: order exceeds rank");
    mpz_class d = 1;
    for (std::size_t i = 0; i < k; ++i) d *= snf.invariants[i];
    return d;
}

mpz_class max_abs(const std::vector<mpz_class>& v) {
    mpz_class m = 0;
    for (const auto& x : v)
        if (abs(x) > m) m = abs(x);
    return m;
}

namespace {

void primitivize(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Subtract the integer multiple of b that minimizes the max-norm of v.
// q -> max_i |v_i - q b_i| is convex, so an integer ternary search finds the
// optimum without stepping through huge multipliers one by one.
void size_reduce_against(std::vector<mpz_class>& v, const std::vector<mpz_class>& b) {
    mpz_class bmin = 0;
    for (const auto& x : b)
        if (x != 0 && (bmin == 0 || abs(x) < bmin)) bmin = abs(x);
    if (bmin == 0) return;

    auto norm_at = [&](const mpz_class& q) {
        mpz_class m = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpz_class d = abs(v[i] - q * b[i]);
            if (d > m) m = d;
        }
        return m;
    };

    mpz_class lo = -(max_abs(v) / bmin) - 1, hi = -lo;
    while (hi - lo > 2) {
        mpz_class m1 = lo + (hi - lo) / 3;
        mpz_class m2 = hi - (hi - lo) / 3;
        if (norm_at(m1) <= norm_at(m2))
            hi = m2;
        else
            lo = m1;
    }
    mpz_class best = 0, best_norm = max_abs(v);
    for (mpz_class q = lo; q <= hi; ++q) {
        mpz_class n = norm_at(q);
        if (n < best_norm) {
            best_norm = n;
            best = q;
        }
    }
    if (best != 0)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= best * b[i];
}

}  // namespace

std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix w = a;
    IntMatrix v = IntMatrix::identity(n);

    auto col_combine = [&](std::size_t j1, std::size_t j2, std::size_t row) {
        // unimodular 2-column transform making w(row, j2) = 0
        mpz_class aa = w(row, j1), bb = w(row, j2), g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), aa.get_mpz_t(),
                   bb.get_mpz_t());
        mpz_class ag = aa / g, bg = bb / g;
        for (std::size_t i = 0; i < m; ++i) {
            mpz_class c1 = s * w(i, j1) + t * w(i, j2);
            mpz_class c2 = bg * w(i, j1) - ag * w(i, j2);
            w(i, j1) = c1;
            w(i, j2) = c2;
        }
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class c1 = s * v(i, j1) + t * v(i, j2);
            mpz_class c2 = bg * v(i, j1) - ag * v(i, j2);
            v(i, j1) = c1;
            v(i, j2) = c2;
        }
    };
    auto swap_cols = [&](std::size_t j1, std::size_t j2) {
        if (j1 == j2) return;
        for (std::size_t i = 0; i < m; ++i) swap(w(i, j1), w(i, j2));
        for (std::size_t i = 0; i < n; ++i) swap(v(i, j1), v(i, j2));
    };

    std::size_t c = 0;
    for (std::size_t row = 0; row < m && c < n; ++row) {
        std::size_t j = c;
        while (j < n && w(row, j) == 0) ++j;
        if (j == n) continue;
        swap_cols(c, j);
        for (std::size_t jj = c + 1; jj < n; ++jj)
            if (w(row, jj) != 0) col_combine(c, jj, row);
        ++c;
    }

    std::vector<std::vector<mpz_class>> basis;
    for (std::size_t j = c; j < n; ++j) {
        std::vector<mpz_class> vec(n);
        for (std::size_t i = 0; i < n; ++i) vec[i] = v(i, j);
        primitivize(vec);  // columns of a unimodular matrix are already primitive
        basis.push_back(std::move(vec));
    }

    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                mpz_class before = max_abs(basis[i]);
                size_reduce_against(basis[i], basis[j]);
                if (max_abs(basis[i]) < before) improved = true;
            }
    }
    return basis;
}

ColumnEchelon column_echelon(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix w = a;
    auto col_combine = [&](std::size_t j1, std::size_t j2, std::size_t row) {
        mpz_class aa = w(row, j1), bb = w(row, j2), g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), aa.get_mpz_t(),
                   bb.get_mpz_t());
        mpz_class ag = aa / g, bg = bb / g;
        for (std::size_t i = 0; i < m; ++i) {
            mpz_class c1 = s * w(i, j1) + t * w(i, j2);
            mpz_class c2 = bg * w(i, j1) - ag * w(i, j2);
            w(i, j1) = c1;
            w(i, j2) = c2;
        }
    };

    ColumnEchelon out;
    std::size_t c = 0;
    for (std::size_t row = 0; row < m && c < n; ++row) {
        std::size_t j = c;
        while (j < n && w(row, j) == 0) ++j;
        if (j == n) continue;
        if (j != c)
            for (std::size_t i = 0; i < m; ++i) swap(w(i, c), w(i, j));
        for (std::size_t jj = c + 1; jj < n; ++jj)
            if (w(row, jj) != 0) col_combine(c, jj, row);
        if (w(row, c) < 0)
            for (std::size_t i = 0; i < m; ++i) w(i, c) = -w(i, c);
        out.pivot_rows.push_back(row);
        ++c;
    }
    IntMatrix h(m, c);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < c; ++j) h(i, j) = w(i, j);
    out.h = std::move(h);
    return out;
}

std::vector<mpz_class> reduce_mod_lattice(std::vector<mpz_class> v,
                                          const ColumnEchelon& ech) {
    for (std::size_t j = 0; j < ech.pivot_rows.size(); ++j) {
        std::size_t pr = ech.pivot_rows[j];
        const mpz_class& piv = ech.h(pr, j);
        // nearest-integer quotient
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[pr].get_mpz_t(), piv.get_mpz_t());
        if (2 * r > piv) q += 1;
        if (q == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= q * ech.h(i, j);
    }
    return v;
}

BvBound bv_bound(const IntMatrix& a) {
    const std::size_t s = a.rows(), r = a.cols();
    if (r <= s) throw domain_error("bv_bound: system not underdetermined");
    if (rank(a) != s) throw domain_error("bv_bound: rows not independent");

    BvBound b;
    b.gram = gram_det(a);
    // gcd of the maximal minors = index of the column span in Z^s, read off
    // the pivot block of the column echelon form (cheaper than SNF here)
    ColumnEchelon ech = column_echelon(a);
    b.divisor = 1;
    for (std::size_t j = 0; j < ech.pivot_rows.size(); ++j)
        b.divisor *= abs(ech.h(ech.pivot_rows[j], j));
    b.radicand = mpq_class(b.gram, b.divisor * b.divisor);
    b.radicand.canonicalize();
    b.exponent = r - s;

    // least B with B^(2(r-s)) >= radicand
    const unsigned long e2 = 2 * static_cast<unsigned long>(b.exponent);
    double approx = std::pow(b.radicand.get_d(), 1.0 / double(e2));
    b.approx = approx;
    mpz_class bb(static_cast<long>(std::max(0.0, std::floor(approx))));
    auto ge_radicand = [&](const mpz_class& x) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), e2);
        return p * b.radicand.get_den() >= b.radicand.get_num();
    };
    while (bb > 0 && ge_radicand(bb - 1)) --bb;
    while (!ge_radicand(bb)) ++bb;
    b.ceiling = bb;
    return b;
}

std::vector<mpz_class> small_kernel_vector(const IntMatrix& a, unsigned long budget) {
    auto basis = kernel_basis(a);
    if (basis.empty()) throw domain_error("small_kernel_vector: trivial kernel");

    std::vector<mpz_class> best = basis[0];
    for (const auto& v : basis)
        if (max_abs(v) < max_abs(best)) best = v;

    // optional exhaustive certification against the Bombieri-Vaaler box
    if (a.cols() > a.rows() && rank(a) == a.rows()) {
        BvBound bound = bv_bound(a);
        const mpz_class& cap = bound.ceiling;
        if (cap > 0 && cap.fits_slong_p()) {
            const long c = cap.get_si();
            const std::size_t dim = basis.size();
            double combos = std::pow(2.0 * double(c) + 1.0, double(dim));
            if (combos <= double(budget)) {
                std::vector<long> coef(dim, -c);
                std::vector<mpz_class> v(a.cols());
                while (true) {
                    std::fill(v.begin(), v.end(), mpz_class(0));
                    bool nonzero = false;
                    for (std::size_t i = 0; i < dim; ++i) {
                        if (coef[i] == 0) continue;
                        nonzero = true;
                        for (std::size_t j = 0; j < v.size(); ++j)
                            v[j] += coef[i] * basis[i][j];
                    }
                    if (nonzero && max_abs(v) < max_abs(best)) {
                        best = v;
                        primitivize(best);
                    }
                    std::size_t k = 0;
                    while (k < dim && coef[k] == c) coef[k++] = -c;
                    if (k == dim) break;
                    ++coef[k];
                }
            }
        }
    }
    primitivize(best);
    return best;
}

}  // namespace exactla
}  // namespace detkit
