#include "detkit/gf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "detkit/errors.hpp"

namespace detkit {
namespace forms {

GF::GF(std::uint32_t p, unsigned k) : p_(p), k_(k) {
    if (k < 1 || k > 2) throw domain_error("GF: only k in {1,2} supported");
    if (k == 2) {
        // search a monic irreducible t^2 - r*t - s over F_p
        bool found = false;
        for (std::uint32_t r = 0; r < p_ && !found; ++r)
            for (std::uint32_t s = 0; s < p_ && !found; ++s) {
                bool has_root = false;
                for (std::uint32_t t = 0; t < p_; ++t)
                    if ((std::uint64_t(t) * t) % p_ ==
                        (std::uint64_t(r) * t + s) % p_) {
                        has_root = true;
                        break;
                    }
                if (!has_root) {
                    r_ = r;
                    s_ = s;
                    found = true;
                }
            }
        if (!found) throw domain_error("GF: no irreducible quadratic found");
    }
}

GFElem GF::from_int(const mpz_class& v) const {
    mpz_class m = v % p_;
    if (m < 0) m += p_;
    return {static_cast<std::uint32_t>(m.get_ui()), 0};
}

GFElem GF::element(std::uint64_t i) const {
    if (k_ == 1) return {static_cast<std::uint32_t>(i % p_), 0};
    return {static_cast<std::uint32_t>(i % p_), static_cast<std::uint32_t>((i / p_) % p_)};
}

GFElem GF::add(GFElem a, GFElem b) const {
    return {(a.c0 + b.c0) % p_, (a.c1 + b.c1) % p_};
}

GFElem GF::sub(GFElem a, GFElem b) const {
    return {(a.c0 + p_ - b.c0) % p_, (a.c1 + p_ - b.c1) % p_};
}

GFElem GF::neg(GFElem a) const {
    return {(p_ - a.c0) % p_, (p_ - a.c1) % p_};
}

GFElem GF::mul(GFElem a, GFElem b) const {
    // (a0 + a1 t)(b0 + b1 t) with t^2 = r t + s
    std::uint64_t lo = std::uint64_t(a.c0) * b.c0;
    std::uint64_t mid = std::uint64_t(a.c0) * b.c1 + std::uint64_t(a.c1) * b.c0;
    std::uint64_t hi = std::uint64_t(a.c1) * b.c1;
    std::uint64_t c0 = (lo + hi % p_ * s_) % p_;
    std::uint64_t c1 = (mid + hi % p_ * r_) % p_;
    return {static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1)};
}

GFElem GF::inv(GFElem a) const {
    if (a.is_zero()) throw domain_error("GF: inverse of zero");
    // brute force is fine at these field sizes
    for (std::uint64_t i = 1; i < size(); ++i) {
        GFElem c = element(i);
        GFElem prod = mul(a, c);
        if (prod == one()) return c;
    }
    throw domain_error("GF: inverse not found");
}

ModForm reduce_mod_p(const Form& f, std::uint32_t p) {
    GF field(p, 1);
    ModForm out;
    out.nvars = f.nvars();
    out.degree = f.degree();
    for (const auto& [e, c] : f.terms()) {
        GFElem r = field.from_int(c);
        if (!r.is_zero()) out.terms.emplace(e, r);
    }
    if (out.terms.empty())
        throw domain_error("reduce_mod_p: form vanishes mod " + std::to_string(p));
    return out;
}

namespace {

// Exact division of homogeneous forms over F_{p^k}; true iff g | f.
bool modform_divides(const GF& field, const ModForm& g, const ModForm& f) {
    std::map<Exponents, GFElem, RtlLexDesc> rem = f.terms;
    const auto& [lg, cg] = *g.terms.begin();
    GFElem cg_inv = field.inv(cg);
    const std::size_t nvars = f.nvars;
    while (!rem.empty()) {
        const auto [lr, cr] = *rem.begin();
        Exponents q(nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
            q[i] = lr[i] - lg[i];
            if (q[i] < 0) return false;
        }
        GFElem qc = field.mul(cr, cg_inv);
        for (const auto& [e, c] : g.terms) {
            Exponents t(nvars);
            for (std::size_t i = 0; i < nvars; ++i) t[i] = q[i] + e[i];
            GFElem cur = {0, 0};
            auto it = rem.find(t);
            if (it != rem.end()) cur = it->second;
            GFElem nv = field.sub(cur, field.mul(qc, c));
            if (it != rem.end()) rem.erase(it);
            if (!nv.is_zero()) rem.emplace(t, nv);
        }
    }
    return true;
}

std::vector<Exponents> monomials_of_degree(int degree, std::size_t nvars) {
    std::vector<Exponents> out;
    Exponents e(nvars, 0);
    // recursive enumeration, then sort RTL descending
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i + 1 == nvars) {
            e[i] = rem;
            out.push_back(e);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            e[i] = v;
            self(self, i + 1, rem - v);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [](const Exponents& a, const Exponents& b) { return rtl_lex_cmp(a, b) > 0; });
    return out;
}

}  // namespace

bool is_abs_irreducible_mod_p(const Form& f, std::uint32_t p,
                              const IrreducibilityOptions& opts) {
    ModForm base = reduce_mod_p(f, p);
    const int d = base.degree;
    const std::size_t nvars = base.nvars;
    if (d <= 1) return true;

    for (unsigned k = 1; k <= opts.max_extension; ++k) {
        GF field(p, k);
        // lift the mod-p form into F_{p^k}
        ModForm fk;
        fk.nvars = nvars;
        fk.degree = d;
        for (const auto& [e, c] : base.terms) fk.terms.emplace(e, c);

        for (int e = 1; e <= d / 2; ++e) {
            auto mons = monomials_of_degree(e, nvars);
            const std::size_t t = mons.size();
            const std::uint64_t q = field.size();
            // candidates normalized so the RTL-greatest present monomial has
            // coefficient 1: sum over choices of the leading index
            long double count = 0;
            for (std::size_t lead = 0; lead < t; ++lead)
                count += std::pow(static_cast<long double>(q),
                                  static_cast<long double>(t - 1 - lead));
            if (count > static_cast<long double>(opts.budget))
                throw budget_error("is_abs_irreducible_mod_p: candidate factor count "
                                   "exceeds budget");

            for (std::size_t lead = 0; lead < t; ++lead) {
                const std::size_t free = t - 1 - lead;
                std::uint64_t total = 1;
                for (std::size_t i = 0; i < free; ++i) total *= q;
                for (std::uint64_t code = 0; code < total; ++code) {
                    ModForm g;
                    g.nvars = nvars;
                    g.degree = e;
                    g.terms.emplace(mons[lead], field.one());
                    std::uint64_t rest = code;
                    for (std::size_t i = 0; i < free; ++i) {
                        GFElem c = field.element(rest % q);
                        rest /= q;
                        if (!c.is_zero()) g.terms.emplace(mons[lead + 1 + i], c);
                    }
                    if (modform_divides(field, g, fk)) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace forms
}  // namespace detkit
