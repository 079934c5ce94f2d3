#include "detkit/coords.hpp"

#include <algorithm>

#include "detkit/errors.hpp"

namespace detkit {
namespace coords {

LargeValueTuple find_large_value_tuple(const Form& f,
                                       std::vector<long long> schedule) {
    if (schedule.empty()) schedule = {1, 2, 4, 8};
    const std::size_t nv = f.nvars();
    const mpz_class nf = f.norm();

    // a nonzero form cannot vanish on every bounded integer box, so the
    // doubling extension below always terminates
    for (std::size_t idx = 0;; ++idx) {
        if (idx == schedule.size()) schedule.push_back(schedule.back() * 2);
        long long r = schedule[idx];

        // deterministic scan order per coordinate: 0, 1, -1, 2, -2, ...;
        // the first maximizer encountered wins ties
        std::vector<long long> order;
        order.push_back(0);
        for (long long t = 1; t <= r; ++t) {
            order.push_back(t);
            order.push_back(-t);
        }

        LargeValueTuple best;
        bool found = false;
        std::vector<long long> a(nv, 0);
        a[nv - 1] = 1;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i + 1 == nv) {
                mpz_class v = abs(f.evaluate(a));
                if (v == 0) return;
                if (!found || v > best.value) {
                    best.tuple = a;
                    best.value = v;
                    found = true;
                }
                return;
            }
            for (long long t : order) {
                a[i] = t;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        if (found) {
            best.ratio = mpq_class(best.value, nf);
            best.ratio.canonicalize();
            return best;
        }
    }
}

IntMatrix build_shear(const std::vector<long long>& a, std::size_t nvars) {
    if (a.size() != nvars || a.back() != 1)
        throw domain_error("build_shear: tuple must have length nvars and end in 1");
    IntMatrix m = IntMatrix::identity(nvars);
    for (std::size_t i = 0; i + 1 < nvars; ++i) m(i, nvars - 1) = to_mpz(a[i]);
    return m;
}

IntMatrix shear_inverse(const IntMatrix& a) {
    const std::size_t n = a.rows();
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, n - 1) = -a(i, n - 1);
    return m;
}

mpz_class compose_norm_inflation_bound(const Form& f, const IntMatrix& a) {
    mpz_class rowsum_max = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += abs(a(i, j));
        if (s > rowsum_max) rowsum_max = s;
    }
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), rowsum_max.get_mpz_t(),
               static_cast<unsigned long>(f.degree()));
    return mpz_class(static_cast<long>(f.terms().size())) * pw;
}

NormalizeResult normalize(const Form& f, const BoundConstants& constants) {
    const std::size_t nv = f.nvars();
    NormalizeCertificate cert;
    cert.norm_before = f.norm();

    mpz_class cf = abs(f.last_var_coefficient());
    if (cf == cert.norm_before) {
        // already in the target class; identity change of coordinates
        IntMatrix id = IntMatrix::identity(nv);
        cert.tuple.assign(nv, 0);
        cert.tuple.back() = 1;
        cert.ratio = mpq_class(cf, cert.norm_before);
        cert.ratio.canonicalize();
        cert.norm_after = cert.norm_before;
        cert.c_after = f.last_var_coefficient();
        cert.primitive = f.is_primitive();
        cert.norm_ratio = 1;
        cert.inflation_bound = compose_norm_inflation_bound(f, id);
        return {f, id, cert};
    }

    LargeValueTuple lv = find_large_value_tuple(f, constants.box_radius_schedule);
    IntMatrix a = build_shear(lv.tuple, nv);
    Form g = f.compose_linear(a);

    cert.tuple = lv.tuple;
    cert.ratio = lv.ratio;
    cert.norm_after = g.norm();
    cert.c_after = g.last_var_coefficient();
    cert.primitive = g.is_primitive();
    cert.norm_ratio = mpq_class(cert.norm_after, cert.norm_before);
    cert.norm_ratio.canonicalize();
    cert.inflation_bound = compose_norm_inflation_bound(f, a);
    return {std::move(g), std::move(a), cert};
}

}  // namespace coords
}  // namespace detkit
