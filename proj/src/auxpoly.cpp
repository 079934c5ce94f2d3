#include "detkit/auxpoly.hpp"

#include <algorithm>
#include <cmath>

#include "detkit/errors.hpp"

namespace detkit {
namespace auxpoly {

using detmethod::MonomialBasis;
using detmethod::monomial_basis;

int degree_bound(int d, int n, long long n_height, const mpz_class& normf,
                 const BoundConstants& c) {
    if (d < 1 || n_height < 1 || normf < 1)
        throw domain_error("degree_bound: arguments out of range");
    double lognorm = std::log(normf.get_d());
    double logfac = normf == 1 ? c.c_add : lognorm + c.c_add;
    double exp_n = double(n + 1) / (n * std::pow(double(d), 1.0 / n));
    double norm_exp = -1.0 / (n * std::pow(double(d), 1.0 + 1.0 / n));
    double val = c.c_m * std::pow(double(n_height), exp_n) * logfac *
                 std::pow(normf.get_d(), norm_exp);
    int m = static_cast<int>(std::ceil(val - 1e-9));
    return std::max(m, d);
}

namespace {

Form form_from_coeffs(const std::vector<mpz_class>& coeffs,
                      const MonomialBasis& basis) {
    TermMap t;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (coeffs[j] != 0) t.emplace(basis.monomials[j], coeffs[j]);
    return Form(basis.nvars, std::move(t));
}

std::vector<mpz_class> coeffs_of(const Form& f, const MonomialBasis& basis) {
    std::vector<mpz_class> v(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        v[j] = f.coefficient(basis.monomials[j]);
    return v;
}

// true when a < b as (max-norm, lex) keys
bool coeff_vec_less(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    mpz_class ma = exactla::max_abs(a), mb = exactla::max_abs(b);
    if (ma != mb) return ma < mb;
    return a < b;
}

}  // namespace

bool bezout_check(const Form& f, const Form& g, const std::vector<ProjPoint>& s) {
    if (f.nvars() != 3 || g.nvars() != 3)
        throw domain_error("bezout_check: plane-curve check needs 3 variables");
    if (f.divides(g))
        throw domain_error("bezout_check: g is divisible by f");
    return static_cast<long long>(s.size()) <=
           static_cast<long long>(f.degree()) * g.degree();
}

AuxResult construct(const Form& f, long long n_height,
                    const BoundConstants& constants, const ConstructOptions& opts) {
    const int d = f.degree();
    const std::size_t nv = f.nvars();
    const int n = static_cast<int>(nv) - 2;
    const mpz_class normf = f.norm();

    points::EnumerateOptions eopts;
    eopts.cell_budget = opts.cell_budget;
    eopts.threads = opts.threads;
    std::vector<ProjPoint> s_points = points::enumerate_points(f, n_height, eopts);

    const int m_base = degree_bound(d, n, n_height, normf, constants);
    int m = opts.m_start.value_or(m_base);
    const int m_cap = opts.allow_escalation ? 4 * m_base : m;

    if (s_points.empty()) {
        // vacuous certificate: the smallest basis monomial not divisible by f
        MonomialBasis basis = monomial_basis(std::max(m, 1), nv);
        for (auto it = basis.monomials.rbegin(); it != basis.monomials.rend(); ++it) {
            TermMap t;
            t.emplace(*it, mpz_class(1));
            Form g(nv, std::move(t));
            if (f.divides(g)) continue;
            AuxResult res{std::move(g)};
            res.m = basis.degree;
            res.r = basis.size();
            res.vanishes_on_s = true;
            res.not_divisible_by_f = true;
            res.bezout_ok = true;
            res.degenerate = true;
            return res;
        }
        throw domain_error("construct: no monomial certificate exists");
    }

    for (; m <= m_cap; ++m) {
        MonomialBasis basis = monomial_basis(m, nv);
        const std::size_t r = basis.size();
        const std::size_t low = m >= d
            ? monomial_basis(m - d, nv).size()
            : 0;
        const std::size_t threshold = r - low;

        detmethod::IndependentSelection sel =
            detmethod::select_independent(s_points, basis);
        if (sel.rank >= threshold) continue;  // the contradiction branch: escalate

        IntMatrix a = detmethod::eval_matrix(sel.tuple, basis);
        auto kernel = exactla::kernel_basis(a);

        // lattice of forms divisible by f: coefficient vectors of f * B[m-d]
        std::optional<exactla::ColumnEchelon> lattice;
        if (low > 0) {
            MonomialBasis lower = monomial_basis(m - d, nv);
            IntMatrix l(r, low);
            for (std::size_t j = 0; j < low; ++j) {
                TermMap t;
                t.emplace(lower.monomials[j], mpz_class(1));
                Form prod = f.multiply(Form(nv, std::move(t)));
                auto col = coeffs_of(prod, basis);
                for (std::size_t i = 0; i < r; ++i) l(i, j) = col[i];
            }
            lattice = exactla::column_echelon(l);
        }

        std::optional<std::vector<mpz_class>> best;
        for (const auto& k : kernel) {
            std::vector<mpz_class> res =
                lattice ? exactla::reduce_mod_lattice(k, *lattice) : k;
            if (exactla::max_abs(res) == 0) continue;
            if (!best || coeff_vec_less(res, *best)) best = std::move(res);
        }
        if (!best) continue;  // kernel inside the f-lattice; escalate

        Form g = form_from_coeffs(*best, basis).primitivized();

        AuxResult out{std::move(g)};
        out.m = m;
        out.s_points = s_points;
        out.xi = sel.tuple;
        out.s = sel.rank;
        out.r = r;
        if (r > sel.rank) out.bv = exactla::bv_bound(a);
        out.vanishes_on_s = std::all_of(
            s_points.begin(), s_points.end(),
            [&](const ProjPoint& p) { return out.g.evaluate(p.coords()) == 0; });
        out.not_divisible_by_f = !f.divides(out.g).has_value();
        out.bezout_ok = nv == 3 ? bezout_check(f, out.g, s_points) : true;
        return out;
    }
    throw cap_error("construct: degree escalation cap " + std::to_string(m_cap) +
                    " reached without a certificate");
}

AuditReport audit_inequality(double s, double m, double n_height,
                             const mpz_class& normf, int d, int n,
                             const BoundConstants& c) {
    AuditReport rep{};
    double logs = s > 1 ? std::log(s) : 0.0;
    rep.gram_log_upper = (n + 2) * s * logs + m * s * std::log(n_height);
    rep.divisor_log_lower =
        s >= 1 ? detmethod::sal2_lower_bound(s, normf, d, n, c) : 0.0;
    double lognorm = std::log(normf.get_d());
    double loglog = lognorm > 0 ? std::log(lognorm) : 0.0;
    rep.lhs_final = n * std::pow(double(d), 1.0 / n) / (n + 1) *
                    (std::log(m) + c.c_add - std::max(loglog, 0.0));
    rep.rhs_final = std::log(n_height) - lognorm / (double(d) * (n + 1));
    rep.contradiction = rep.lhs_final > rep.rhs_final;
    return rep;
}

double count_points_bound(int d, int n, double n_height, const mpz_class& normf,
                          const BoundConstants& c) {
    (void)n;
    double lognorm = std::log(normf.get_d());
    double logfac = normf == 1 ? c.c_add : lognorm + c.c_add;
    return std::pow(n_height, 2.0 / d) * logfac *
               std::pow(normf.get_d(), -1.0 / (double(d) * d)) +
           c.c_add;
}

}  // namespace auxpoly
}  // namespace detkit
