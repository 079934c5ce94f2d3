#include "detkit/point.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "detkit/errors.hpp"

namespace detkit {
namespace points {

ProjPoint ProjPoint::canonical(std::vector<long long> coords) {
    long long g = 0;
    bool nonzero = false;
    for (long long c : coords) {
        g = std::gcd(g, std::llabs(c));
        if (c != 0) nonzero = true;
    }
    if (!nonzero) throw domain_error("ProjPoint: zero vector");
    for (auto& c : coords) c /= g;
    for (long long c : coords) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : coords) x = -x;
        break;
    }
    return ProjPoint(std::move(coords));
}

long long ProjPoint::height() const {
    long long h = 0;
    for (long long c : c_) h = std::max(h, std::llabs(c));
    return h;
}

std::vector<std::uint32_t> ProjPoint::reduce_mod_p(std::uint32_t p) const {
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        long long m = c_[i] % static_cast<long long>(p);
        if (m < 0) m += p;
        r[i] = static_cast<std::uint32_t>(m);
    }
    // primitivity guarantees some residue is nonzero; scale so the last
    // nonzero coordinate is 1
    std::size_t last = r.size();
    for (std::size_t i = r.size(); i-- > 0;)
        if (r[i] != 0) {
            last = i;
            break;
        }
    if (last == r.size())
        throw domain_error("reduce_mod_p: point not primitive mod p");
    std::uint64_t inv = 1;
    for (std::uint32_t c = 1; c < p; ++c)
        if ((std::uint64_t(c) * r[last]) % p == 1) {
            inv = c;
            break;
        }
    for (auto& x : r) x = static_cast<std::uint32_t>((std::uint64_t(x) * inv) % p);
    return r;
}

namespace {

// Compiled evaluator: __int128 fast path when coefficients and box values
// cannot overflow, mpz otherwise.
struct TermC {
    Exponents e;
    long long c;
};

bool compile_terms(const Form& f, long long n, std::vector<TermC>& out) {
    const double limit = 9.0e18;
    double box = 1;
    for (int i = 0; i < f.degree(); ++i) box *= double(n);
    double worst = 0;
    for (const auto& [e, c] : f.terms()) {
        if (!c.fits_slong_p()) return false;
        worst += std::abs(c.get_d()) * box;
        out.push_back({e, c.get_si()});
    }
    return worst < limit;  // sum of terms fits well inside __int128 anyway
}

bool is_zero_fast(const std::vector<TermC>& terms, const long long* x, std::size_t nv) {
    __int128 acc = 0;
    for (const auto& t : terms) {
        __int128 v = t.c;
        for (std::size_t i = 0; i < nv; ++i)
            for (int k = 0; k < t.e[i]; ++k) v *= x[i];
        acc += v;
    }
    return acc == 0;
}

// gcd of all coordinates; 0 for the zero vector
long long vec_gcd(const long long* x, std::size_t nv) {
    long long g = 0;
    for (std::size_t i = 0; i < nv; ++i) g = std::gcd(g, std::llabs(x[i]));
    return g;
}

void scan_range(const Form& f, const std::vector<TermC>& fast, bool use_fast,
                long long n, long long x0_lo, long long x0_hi,
                std::vector<ProjPoint>& out) {
    const std::size_t nv = f.nvars();
    std::vector<long long> x(nv);
    // canonical vectors: first nonzero coordinate positive, so each leading
    // coordinate scans [0, n] and earlier-zero prefixes force positivity later
    std::vector<long long> lo(nv), hi(nv);
    auto emit = [&]() {
        // skip non-canonical and imprimitive vectors
        bool nonzero = false;
        for (std::size_t i = 0; i < nv; ++i) {
            if (x[i] == 0) continue;
            if (!nonzero && x[i] < 0) return;
            nonzero = true;
        }
        if (!nonzero) return;
        if (vec_gcd(x.data(), nv) != 1) return;
        bool zero = use_fast ? is_zero_fast(fast, x.data(), nv)
                             : f.evaluate(x) == 0;
        if (zero) out.push_back(ProjPoint::canonical(x));
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == nv) {
            emit();
            return;
        }
        long long a = (i == 0) ? x0_lo : -n;
        long long b = (i == 0) ? x0_hi : n;
        for (long long v = a; v <= b; ++v) {
            x[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<ProjPoint> enumerate_points(const Form& f, long long n,
                                        const EnumerateOptions& opts) {
    if (f.nvars() < 3 || f.nvars() > 4)
        throw domain_error("enumerate_points: supported for 3 or 4 variables");
    if (n < 1) throw domain_error("enumerate_points: height bound must be >= 1");

    double cells = 1;
    for (std::size_t i = 0; i < f.nvars(); ++i) cells *= 2.0 * double(n) + 1.0;
    if (cells > double(opts.cell_budget))
        throw budget_error("enumerate_points: box volume exceeds budget");

    std::vector<TermC> fast;
    bool use_fast = compile_terms(f, n, fast);

    unsigned nthreads = std::max(1u, opts.threads);
    // canonical sign means x0 < 0 never yields output; scan [0, n] only
    std::vector<std::vector<ProjPoint>> parts(nthreads);
    if (nthreads == 1) {
        scan_range(f, fast, use_fast, n, 0, n, parts[0]);
    } else {
        std::vector<std::thread> workers;
        long long span = n + 1;
        for (unsigned t = 0; t < nthreads; ++t) {
            long long lo = span * t / nthreads;
            long long hi = span * (t + 1) / nthreads - 1;
            workers.emplace_back([&, t, lo, hi] {
                if (lo <= hi) scan_range(f, fast, use_fast, n, lo, hi, parts[t]);
            });
        }
        for (auto& w : workers) w.join();
    }

    std::vector<ProjPoint> all;
    for (auto& p : parts)
        all.insert(all.end(), std::make_move_iterator(p.begin()),
                   std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool is_smooth_mod_p(const Form& f, const ProjPoint& xi, std::uint32_t p) {
    mpz_class v = f.evaluate(xi.coords());
    if (v % p != 0)
        throw domain_error("is_smooth_mod_p: point not on the reduced hypersurface");
    for (std::size_t k = 0; k < f.nvars(); ++k)
        if (f.partial_at(k, xi.coords()) % p != 0) return true;
    return false;
}

}  // namespace points
}  // namespace detkit
