#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "detkit/detmethod.hpp"
#include "detkit/errors.hpp"
#include "test_util.hpp"

using namespace detkit;
using namespace detkit::detmethod;
using testutil::Rng;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<ProjPoint> pts_of(std::initializer_list<std::vector<long long>> cs) {
    std::vector<ProjPoint> out;
    for (const auto& c : cs) out.push_back(ProjPoint::canonical(c));
    return out;
}

}  // namespace

TEST_CASE("monomial_basis: counts and order") {
    CHECK(monomial_basis(1, 3).size() == 3);
    CHECK(monomial_basis(3, 3).size() == 10);
    CHECK(monomial_basis(6, 3).size() == 28);
    for (int d = 0; d <= 6; ++d)
        for (std::size_t nv = 3; nv <= 5; ++nv)
            CHECK(monomial_basis(d, nv).size() == binom(d + nv - 1, nv - 1));

    auto b = monomial_basis(2, 3);
    std::set<Exponents> distinct(b.monomials.begin(), b.monomials.end());
    CHECK(distinct.size() == b.size());
    for (const auto& e : b.monomials)
        CHECK(e[0] + e[1] + e[2] == 2);
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        CHECK(rtl_lex_cmp(b.monomials[i], b.monomials[i + 1]) > 0);
}

TEST_CASE("eval_matrix") {
    auto pts = pts_of({{1, 0, 1}, {0, 1, 1}});
    IntMatrix m = eval_matrix(pts, monomial_basis(1, 3));
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    // degree-1 basis in RTL-descending order is x2, x1, x0
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 1) == 0);
    CHECK(m(0, 2) == 1);
    CHECK(m(1, 0) == 1);
    CHECK(m(1, 1) == 1);
    CHECK(m(1, 2) == 0);

    CHECK(eval_matrix({}, monomial_basis(2, 3)).rows() == 0);
}

TEST_CASE("select_independent on the conic point set") {
    Form conic = Form::parse("x0^2 + x1^2 - x2^2", 3);
    auto pts = points::enumerate_points(conic, 5);
    REQUIRE(pts.size() == 12);

    auto deg1 = select_independent(pts, monomial_basis(1, 3));
    CHECK(deg1.rank == 3);
    CHECK(deg1.tuple.size() == 3);

    auto deg6 = select_independent(pts, monomial_basis(6, 3));
    CHECK(deg6.rank == 12);

    auto single = select_independent({pts[0]}, monomial_basis(4, 3));
    CHECK(single.rank == 1);

    // full row rank, and no unselected point raises it
    IntMatrix sel = eval_matrix(deg1.tuple, monomial_basis(1, 3));
    CHECK(exactla::rank(sel) == deg1.rank);
    CHECK(exactla::rank(eval_matrix(pts, monomial_basis(1, 3))) == deg1.rank);
}

TEST_CASE("cluster_valuation_bound") {
    Form q = Form::parse("x0*x2 - x1^2", 3);
    auto tuple = pts_of({{1, 1, 1}, {1, -1, 1}});
    PrimeReport rep = cluster_valuation_bound(tuple, 2, q);
    REQUIRE(rep.clusters.size() == 1);
    CHECK(rep.clusters[0].members.size() == 2);
    CHECK(rep.clusters[0].smooth);
    CHECK(rep.guaranteed_valuation == 1);

    // pairwise distinct reductions contribute nothing
    auto distinct = pts_of({{1, 0, 0}, {0, 0, 1}, {1, 1, 1}});
    CHECK(cluster_valuation_bound(distinct, 5, q).guaranteed_valuation == 0);

    // three points in one smooth cluster give 3 = 3*2/2
    auto triple = pts_of({{1, 1, 1}, {1, 4, 16}, {1, 7, 49}});
    for (const auto& p : triple) REQUIRE(q.evaluate(p.coords()) == 0);
    PrimeReport t3 = cluster_valuation_bound(triple, 3, q);
    REQUIRE(t3.clusters.size() == 1);
    CHECK(t3.guaranteed_valuation == 3);
}

TEST_CASE("vp_of_det") {
    std::vector<Form> xy = {Form::parse("x0", 3), Form::parse("x1", 3)};
    auto tuple = pts_of({{1, 1, 1}, {1, -1, 1}});
    DetValuation dv = vp_of_det(xy, tuple, 2);
    CHECK(dv.delta == -2);
    CHECK(dv.valuation == 1);

    auto repeated = pts_of({{1, 1, 1}, {1, 1, 1}});
    CHECK_FALSE(vp_of_det(xy, repeated, 2).valuation.has_value());

    std::vector<Form> xyz = {Form::parse("x0", 3), Form::parse("x1", 3),
                             Form::parse("x2", 3)};
    auto axes = pts_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    DetValuation id = vp_of_det(xyz, axes, 7);
    CHECK(id.delta == 1);
    CHECK(id.valuation == 0);
}

TEST_CASE("bad_primes") {
    auto conic = bad_primes(Form::parse("x0^2 + x1^2 - x2^2", 3), 13);
    CHECK(std::count(conic.primes.begin(), conic.primes.end(), 2) == 1);

    auto smooth = bad_primes(Form::parse("x0*x2 - x1^2", 3), 13);
    CHECK(smooth.primes.empty());
    CHECK(smooth.product == 1);

    auto fermat = bad_primes(Form::parse("x0^3 + x1^3 + x2^3", 3), 7);
    CHECK(std::count(fermat.primes.begin(), fermat.primes.end(), 3) == 1);
}

TEST_CASE("primes_up_to and mertens_sums") {
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(13) ==
          std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13});

    MertensSums two = mertens_sums(2);
    CHECK(two.log_over_p == doctest::Approx(std::log(2.0) / 2));
    CHECK(two.chebyshev == doctest::Approx(std::log(2.0)));

    CHECK(mertens_sums(10).log_over_p == doctest::Approx(1.3127).epsilon(1e-3));
    for (double x : {10., 100., 1000., 10000., 100000.})
        CHECK(std::abs(mertens_sums(x).log_over_p - std::log(x)) <= 2.0);
}

TEST_CASE("salberger_lower_bound calculator") {
    BoundConstants zeroed;  // O-term constants default to zero
    CHECK(salberger_lower_bound(100, 5, 2, 1, zeroed) == doctest::Approx(1000.0));
    CHECK(salberger_lower_bound(0, 5, 2, 1, zeroed) == doctest::Approx(0.0));
    double want = std::sqrt(2.0) * (2.0 / 3.0) * std::pow(1000.0, 1.5) / 7.0;
    CHECK(salberger_lower_bound(1000, 7, 3, 2, zeroed) == doctest::Approx(want));
}

TEST_CASE("sal2_lower_bound calculator") {
    BoundConstants zeroed;
    double e = std::exp(1.0);
    CHECK(sal2_lower_bound(e, 1, 2, 1, zeroed) == doctest::Approx(0.5 * e * e));
    // normf <= e clamps the log log term at zero
    CHECK(sal2_lower_bound(10, 2, 2, 1, zeroed) ==
          doctest::Approx(0.5 * std::pow(10.0, 2.0) * std::log(10.0)));
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 10);
    double want = 0.5 * 10000.0 * (std::log(100.0) - std::log(std::log(1e10)));
    CHECK(sal2_lower_bound(100, big, 2, 1, zeroed) == doctest::Approx(want));
    CHECK_THROWS_AS(sal2_lower_bound(0.5, 1, 2, 1, zeroed), domain_error);
}

TEST_CASE("basis count identity for plane curves") {
    for (int d = 1; d <= 6; ++d)
        for (int m = 6; m <= 20; ++m) {
            long lhs = long(monomial_basis(m, 3).size()) -
                       long(monomial_basis(m - d, 3).size());
            CHECK(lhs == long(d) * m - long(d) * (d - 3) / 2);
        }
}

TEST_CASE("property: clustered divisibility on random tuples") {
    Rng rng(53);
    std::vector<Form> curves = {Form::parse("x0^2 + x1^2 - x2^2", 3),
                                Form::parse("x0^3 - x1^2*x2", 3)};
    std::vector<std::vector<ProjPoint>> pools;
    for (const auto& f : curves) pools.push_back(points::enumerate_points(f, 12));
    const std::vector<std::uint32_t> primes = {3, 5, 7, 11};

    int checked = 0;
    for (int trial = 0; checked < 120 && trial < 4000; ++trial) {
        std::size_t which = rng() % curves.size();
        const Form& f = curves[which];
        const auto& pool = pools[which];
        std::uint32_t p = primes[rng() % primes.size()];
        std::size_t k = 2 + rng() % 5;  // tuple size in [2, 6]

        std::vector<ProjPoint> tuple;
        std::set<std::size_t> used;
        while (tuple.size() < k) {
            std::size_t i = rng() % pool.size();
            if (used.insert(i).second) tuple.push_back(pool[i]);
        }

        // random square system of monomial forms of one degree
        int deg = 1 + int(rng() % 4);
        auto basis = monomial_basis(deg, 3);
        std::vector<Form> fs;
        for (std::size_t i = 0; i < k; ++i) {
            TermMap t;
            t.emplace(basis.monomials[rng() % basis.size()], mpz_class(1));
            fs.emplace_back(3, std::move(t));
        }

        PrimeReport rep = cluster_valuation_bound(tuple, p, f);
        DetValuation dv = vp_of_det(fs, tuple, p);
        if (dv.valuation)
            CHECK(*dv.valuation >= rep.guaranteed_valuation);
        // a vanishing determinant has infinite valuation: nothing to check
        ++checked;
    }
    CHECK(checked >= 120);
}

TEST_CASE("property: determinant antisymmetry under point swap") {
    Rng rng(59);
    Form conic = Form::parse("x0^2 + x1^2 - x2^2", 3);
    auto pool = points::enumerate_points(conic, 10);
    auto basis = monomial_basis(2, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<ProjPoint> tuple;
        std::set<std::size_t> used;
        while (tuple.size() < 3) {
            std::size_t i = rng() % pool.size();
            if (used.insert(i).second) tuple.push_back(pool[i]);
        }
        std::vector<Form> fs;
        for (int i = 0; i < 3; ++i) {
            TermMap t;
            t.emplace(basis.monomials[rng() % basis.size()], mpz_class(1));
            fs.emplace_back(3, std::move(t));
        }
        DetValuation before = vp_of_det(fs, tuple, 5);
        std::swap(tuple[0], tuple[2]);
        DetValuation after = vp_of_det(fs, tuple, 5);
        CHECK(after.delta == -before.delta);
        CHECK(after.valuation == before.valuation);
    }
}
