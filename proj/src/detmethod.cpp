#include "detkit/detmethod.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "detkit/errors.hpp"

namespace detkit {
namespace detmethod {

MonomialBasis monomial_basis(int degree, std::size_t nvars) {
    if (degree < 0) throw domain_error("monomial_basis: negative degree");
    MonomialBasis b;
    b.degree = degree;
    b.nvars = nvars;
    Exponents e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i + 1 == nvars) {
            e[i] = rem;
            b.monomials.push_back(e);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            e[i] = v;
            self(self, i + 1, rem - v);
        }
    };
    rec(rec, 0, degree);
    std::sort(b.monomials.begin(), b.monomials.end(),
              [](const Exponents& a, const Exponents& c) { return rtl_lex_cmp(a, c) > 0; });
    return b;
}

IntMatrix eval_matrix(const std::vector<ProjPoint>& pts, const MonomialBasis& basis) {
    IntMatrix m(pts.size(), basis.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].nvars() != basis.nvars)
            throw domain_error("eval_matrix: point/basis variable mismatch");
        std::vector<mpz_class> c = to_mpz_vec(pts[i].coords());
        for (std::size_t j = 0; j < basis.size(); ++j)
            m(i, j) = forms::evaluate_monomial(basis.monomials[j], c);
    }
    return m;
}

IndependentSelection select_independent(const std::vector<ProjPoint>& pts,
                                        const MonomialBasis& basis) {
    IndependentSelection sel;
    for (const auto& p : pts) {
        std::vector<ProjPoint> trial = sel.tuple;
        trial.push_back(p);
        std::size_t r = exactla::rank(eval_matrix(trial, basis));
        if (r > sel.rank) {
            sel.tuple = std::move(trial);
            sel.rank = r;
        }
    }
    return sel;
}

PrimeReport cluster_valuation_bound(const std::vector<ProjPoint>& tuple,
                                    std::uint32_t p, const Form& f) {
    if (f.nvars() != 3)
        throw domain_error("cluster_valuation_bound: curve specialization needs 3 variables");
    PrimeReport rep;
    rep.p = p;

    std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        groups[tuple[i].reduce_mod_p(p)].push_back(i);

    for (const auto& [residue, members] : groups) {
        Cluster cl;
        cl.residue = residue;
        cl.members = members;
        cl.smooth = points::is_smooth_mod_p(f, tuple[members.front()], p);
        if (cl.smooth) {
            long m = static_cast<long>(members.size());
            rep.guaranteed_valuation += m * (m - 1) / 2;
        }
        rep.clusters.push_back(std::move(cl));
    }
    return rep;
}

DetValuation vp_of_det(const std::vector<Form>& fs,
                       const std::vector<ProjPoint>& tuple, std::uint32_t p) {
    if (fs.size() != tuple.size())
        throw domain_error("vp_of_det: system not square");
    IntMatrix m(fs.size(), fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < tuple.size(); ++j)
            m(i, j) = fs[i].evaluate(tuple[j].coords());

    DetValuation dv;
    dv.delta = exactla::det(m);
    if (dv.delta == 0) return dv;  // valuation infinite
    long v = 0;
    mpz_class x = abs(dv.delta);
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
        mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
        ++v;
    }
    dv.valuation = v;
    return dv;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t x) {
    std::vector<std::uint32_t> out;
    if (x < 2) return out;
    std::vector<bool> comp(x + 1, false);
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= x; j += i) comp[j] = true;
    }
    return out;
}

BadPrimes bad_primes(const Form& f, std::uint32_t pmax,
                     const forms::IrreducibilityOptions& opts) {
    BadPrimes bp;
    bp.norm_f = f.norm();
    for (std::uint32_t p : primes_up_to(pmax)) {
        if (!forms::is_abs_irreducible_mod_p(f, p, opts)) {
            bp.primes.push_back(p);
            bp.product *= p;
        }
    }
    return bp;
}

MertensSums mertens_sums(double x) {
    if (x < 2) throw domain_error("mertens_sums: x must be >= 2");
    MertensSums s;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint64_t>(x))) {
        double lp = std::log(double(p));
        s.log_over_p += lp / double(p);
        s.chebyshev += lp;
    }
    return s;
}

double salberger_lower_bound(double s, double p, int d, int n,
                             const BoundConstants& c) {
    (void)d;
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= i;
    double main = std::pow(nfact, 1.0 / n) * (double(n) / (n + 1)) *
                  std::pow(s, 1.0 + 1.0 / n) /
                  (p + c.c_sqrt * std::sqrt(p));
    return main + c.c_lin * s;
}

double sal2_lower_bound(double s, const mpz_class& normf, int d, int n,
                        const BoundConstants& c) {
    (void)d;
    if (s < 1) throw domain_error("sal2_lower_bound: s must be >= 1");
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= i;
    double lognorm = std::log(normf.get_d());
    double loglog = lognorm > 0 ? std::log(lognorm) : 0.0;
    double inner = std::log(s) + c.c_sal2 - n * std::max(loglog, 0.0);
    return std::pow(nfact, 1.0 / n) / (n + 1) * std::pow(s, 1.0 + 1.0 / n) * inner;
}

}  // namespace detmethod
}  // namespace detkit
