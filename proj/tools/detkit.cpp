#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "detkit/auxpoly.hpp"
#include "detkit/constants.hpp"
#include "detkit/coords.hpp"
#include "detkit/detmethod.hpp"
#include "detkit/errors.hpp"
#include "detkit/serialize.hpp"

namespace {

using namespace detkit;

constexpr const char* kSchemaVersion = "1";

struct CommonOpts {
    std::string poly;
    std::string poly_file;
    long long n_height = 0;
    unsigned seed = 0;
    bool emit_json = false;
    unsigned threads = 1;
    BoundConstants constants;
};

void add_constant_flags(CLI::App* cmd, BoundConstants& c) {
    cmd->add_option("--c-m", c.c_m, "multiplier in the auxiliary-degree formula");
    cmd->add_option("--c-add", c.c_add, "additive O(1) companion of log||f||");
    cmd->add_option("--c-sqrt", c.c_sqrt, "sqrt(p) term of the valuation bound");
    cmd->add_option("--c-lin", c.c_lin, "linear-in-s term of the valuation bound");
    cmd->add_option("--c-sal2", c.c_sal2, "O(1) term of the gcd-of-determinants bound");
    cmd->add_option("--kappa-v", c.kappa_v, "class-V threshold (display only)");
}

void add_poly_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--poly", o.poly, "polynomial in the x0..x{k-1} grammar");
    cmd->add_option("--poly-file", o.poly_file, "file containing the polynomial");
}

Form load_form(const CommonOpts& o, std::size_t nvars) {
    std::string text = o.poly;
    if (text.empty() && !o.poly_file.empty()) {
        std::ifstream in(o.poly_file);
        if (!in) throw parse_error("cannot open polynomial file: " + o.poly_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    if (text.empty()) throw parse_error("no polynomial given (--poly or --poly-file)");
    return Form::parse(text, nvars);
}

unsigned long long cell_budget_from_env() {
    const char* env = std::getenv("DETKIT_BUDGET");
    if (!env) return 1'000'000'000ULL;
    return std::strtoull(env, nullptr, 10);
}

json report_skeleton(const std::string& subcommand, const CommonOpts& o) {
    return json{{"schema_version", kSchemaVersion},
                {"subcommand", subcommand},
                {"seed", o.seed}};
}

void emit(const json& report, const CommonOpts& o, const std::string& summary,
          double elapsed_ms) {
    if (o.emit_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << summary;
        std::cout << "elapsed: " << elapsed_ms << " ms\n";
    }
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

int cmd_enumerate(const CommonOpts& o) {
    Timer t;
    Form f = load_form(o, 3);
    points::EnumerateOptions eo;
    eo.cell_budget = cell_budget_from_env();
    eo.threads = o.threads;
    auto pts = points::enumerate_points(f, o.n_height, eo);

    json rep = report_skeleton("enumerate", o);
    rep["input"] = {{"poly", f.to_string()}, {"N", o.n_height}};
    rep["points"] = to_json(pts);
    rep["count"] = pts.size();

    std::ostringstream s;
    s << "X(f;" << o.n_height << ") = " << pts.size() << "\n";
    for (const auto& p : pts) {
        s << "  (";
        for (std::size_t i = 0; i < p.coords().size(); ++i)
            s << p.coords()[i] << (i + 1 < p.coords().size() ? ", " : ")\n");
    }
    emit(rep, o, s.str(), t.ms());
    return 0;
}

int cmd_construct(const CommonOpts& o, std::optional<int> forced_degree,
                  bool escalate) {
    Timer t;
    Form f = load_form(o, 3);

    coords::NormalizeResult norm = coords::normalize(f, o.constants);

    auxpoly::ConstructOptions co;
    co.cell_budget = cell_budget_from_env();
    co.threads = o.threads;
    if (forced_degree) {
        co.m_start = forced_degree;
        co.allow_escalation = escalate;
    }
    auxpoly::AuxResult res = auxpoly::construct(norm.g, o.n_height, o.constants, co);

    json rep = report_skeleton("construct", o);
    rep["input"] = {{"poly", f.to_string()}, {"N", o.n_height}};
    rep["normalization"] = to_json(norm.certificate);
    rep["normalized_poly"] = norm.g.to_string();
    rep["result"] = to_json(res);

    std::ostringstream s;
    s << "auxiliary form g = " << res.g.to_string() << "\n"
      << "degree M = " << res.m << ", |S| = " << res.s_points.size()
      << ", s = " << res.s << ", r = " << res.r << "\n"
      << "checks: vanishes_on_S=" << res.vanishes_on_s
      << " not_divisible_by_f=" << res.not_divisible_by_f
      << " bezout_ok=" << res.bezout_ok << "\n";
    emit(rep, o, s.str(), t.ms());
    return 0;
}

int cmd_valuation(const CommonOpts& o, std::uint32_t p, unsigned tuple_size,
                  unsigned trials) {
    Timer t;
    Form f = load_form(o, 3);
    points::EnumerateOptions eo;
    eo.cell_budget = cell_budget_from_env();
    eo.threads = o.threads;
    auto pts = points::enumerate_points(f, o.n_height, eo);
    if (pts.size() < tuple_size)
        throw domain_error("valuation: fewer points than the tuple size");

    bool bad = !forms::is_abs_irreducible_mod_p(f, p);

    std::mt19937_64 rng(o.seed);
    json reports = json::array();
    std::ostringstream s;
    for (unsigned trial = 0; trial < trials; ++trial) {
        std::vector<ProjPoint> tuple;
        std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
        for (unsigned i = 0; i < tuple_size; ++i) tuple.push_back(pts[pick(rng)]);

        detmethod::PrimeReport rep = detmethod::cluster_valuation_bound(tuple, p, f);
        rep.is_bad = bad;

        // seeded random square system of monomial forms
        int deg = 1;
        while (detmethod::monomial_basis(deg, 3).size() < tuple.size()) ++deg;
        auto basis = detmethod::monomial_basis(deg, 3);
        std::vector<std::size_t> idx(basis.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<Form> fs;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            TermMap tm;
            tm.emplace(basis.monomials[idx[i]], mpz_class(1));
            fs.emplace_back(3, std::move(tm));
        }
        detmethod::DetValuation dv = detmethod::vp_of_det(fs, tuple, p);
        rep.delta = dv.delta;
        rep.observed_valuation = dv.valuation;
        reports.push_back(to_json(rep));

        s << "trial " << trial << ": guaranteed v_" << p << " >= "
          << rep.guaranteed_valuation << ", observed ";
        if (rep.observed_valuation)
            s << *rep.observed_valuation;
        else
            s << "infinite (Delta = 0)";
        s << "\n";
    }

    json rep = report_skeleton("valuation", o);
    rep["input"] = {{"poly", f.to_string()},
                    {"N", o.n_height},
                    {"prime", p},
                    {"tuple_size", tuple_size},
                    {"trials", trials}};
    rep["reports"] = reports;
    emit(rep, o, s.str(), t.ms());
    return 0;
}

int cmd_bounds(const CommonOpts& o, int d, int n, const std::string& normf_str,
               std::optional<double> s_opt, std::optional<int> m_opt, double p) {
    Timer t;
    mpz_class normf(normf_str);
    int m = m_opt.value_or(auxpoly::degree_bound(d, n, o.n_height, normf, o.constants));
    double s = s_opt.value_or(double(d) * m - double(d) * (d - 3) / 2.0);

    auxpoly::AuditReport audit =
        auxpoly::audit_inequality(s, m, double(o.n_height), normf, d, n, o.constants);

    json rep = report_skeleton("bounds", o);
    rep["input"] = {{"d", d}, {"n", n},     {"N", o.n_height},
                    {"normf", normf_str},   {"s", s},
                    {"M", m},  {"prime", p}};
    rep["degree_bound"] = m;
    rep["count_points_bound"] =
        auxpoly::count_points_bound(d, n, double(o.n_height), normf, o.constants);
    rep["salberger_lower_bound"] =
        detmethod::salberger_lower_bound(s, p, d, n, o.constants);
    rep["sal2_lower_bound"] = detmethod::sal2_lower_bound(s, normf, d, n, o.constants);
    rep["audit"] = {{"gram_log_upper", audit.gram_log_upper},
                    {"divisor_log_lower", audit.divisor_log_lower},
                    {"lhs_final", audit.lhs_final},
                    {"rhs_final", audit.rhs_final},
                    {"contradiction", audit.contradiction}};

    std::ostringstream txt;
    txt << "degree bound M = " << m << "\n"
        << "count bound = " << rep["count_points_bound"].get<double>() << "\n"
        << "valuation lower bound (s=" << s << ", p=" << p
        << ") = " << rep["salberger_lower_bound"].get<double>() << "\n"
        << "log|Delta| lower bound = " << rep["sal2_lower_bound"].get<double>() << "\n"
        << "audit: lhs=" << audit.lhs_final << " rhs=" << audit.rhs_final
        << (audit.contradiction ? "  (contradiction)" : "") << "\n";
    emit(rep, o, txt.str(), t.ms());
    return 0;
}

int cmd_scaling(const CommonOpts& o, std::vector<long long> heights) {
    Timer t;
    Form f = load_form(o, 3);
    if (heights.empty()) heights = {10, 20, 40, 80};

    points::EnumerateOptions eo;
    eo.cell_budget = cell_budget_from_env();
    eo.threads = o.threads;

    json table = json::array();
    std::vector<double> lx, ly;
    std::ostringstream s;
    for (long long n : heights) {
        auto pts = points::enumerate_points(f, n, eo);
        table.push_back(json{{"N", n}, {"count", pts.size()}});
        s << "N = " << n << ": X = " << pts.size() << "\n";
        if (!pts.empty()) {
            lx.push_back(std::log(double(n)));
            ly.push_back(std::log(double(pts.size())));
        }
    }

    json rep = report_skeleton("scaling", o);
    rep["input"] = {{"poly", f.to_string()}, {"heights", heights}};
    rep["counts"] = table;
    rep["reference_exponent"] = 2.0 / f.degree();

    if (lx.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sx += lx[i];
            sy += ly[i];
            sxx += lx[i] * lx[i];
            sxy += lx[i] * ly[i];
        }
        double k = double(lx.size());
        double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        rep["slope"] = slope;
        s << "log-log slope = " << slope << " (reference 2/d = " << 2.0 / f.degree()
          << ")\n";
    } else {
        rep["slope"] = nullptr;
        s << "slope undefined (too few nonzero counts)\n";
    }
    emit(rep, o, s.str(), t.ms());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determinant-method toolkit for rational points on curves"};
    app.require_subcommand(1);

    CommonOpts common;

    auto* enumerate = app.add_subcommand("enumerate", "list points of height <= N");
    add_poly_flags(enumerate, common);
    enumerate->add_option("-N,--height", common.n_height, "height bound")->required();

    auto* construct = app.add_subcommand(
        "construct", "build the auxiliary form vanishing on all small points");
    add_poly_flags(construct, common);
    construct->add_option("-N,--height", common.n_height, "height bound")->required();
    std::optional<int> forced_degree;
    bool escalate = false;
    construct->add_option("--degree", forced_degree,
                          "force the starting degree M (disables escalation)");
    construct->add_flag("--escalate", escalate,
                        "allow escalation above a forced degree");

    auto* valuation = app.add_subcommand(
        "valuation", "p-adic valuation of random evaluation determinants");
    add_poly_flags(valuation, common);
    valuation->add_option("-N,--height", common.n_height, "height bound")->required();
    std::uint32_t prime = 3;
    unsigned tuple_size = 4, trials = 1;
    valuation->add_option("--prime", prime, "prime p")->required();
    valuation->add_option("--tuple-size", tuple_size, "points per tuple");
    valuation->add_option("--trials", trials, "number of random tuples");

    auto* bounds = app.add_subcommand("bounds", "evaluate the bound calculators");
    int bd = 2, bn = 1;
    std::string normf = "1";
    std::optional<double> s_opt;
    std::optional<int> m_opt;
    double bp = 5.0;
    bounds->add_option("-d,--d", bd, "degree of f");
    bounds->add_option("-n,--n", bn, "ambient dimension parameter");
    bounds->add_option("-N,--height", common.n_height, "height bound")->required();
    bounds->add_option("--normf", normf, "norm of f (decimal string)");
    bounds->add_option("--s", s_opt, "tuple size s for the calculators");
    bounds->add_option("--M", m_opt, "degree M for the audit");
    bounds->add_option("--prime", bp, "prime for the valuation calculator");

    auto* scaling = app.add_subcommand("scaling", "point counts against N^{2/d}");
    add_poly_flags(scaling, common);
    std::vector<long long> heights;
    scaling->add_option("--heights", heights, "height bounds (default 10 20 40 80)");

    for (CLI::App* cmd : {enumerate, construct, valuation, bounds, scaling}) {
        cmd->add_option("--seed", common.seed, "random seed");
        cmd->add_flag("--json", common.emit_json, "emit the machine-readable report");
        cmd->add_option("--threads", common.threads, "enumeration worker count");
        add_constant_flags(cmd, common.constants);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return cmd_enumerate(common);
        if (construct->parsed()) return cmd_construct(common, forced_degree, escalate);
        if (valuation->parsed())
            return cmd_valuation(common, prime, tuple_size, trials);
        if (bounds->parsed())
            return cmd_bounds(common, bd, bn, normf, s_opt, m_opt, bp);
        if (scaling->parsed()) return cmd_scaling(common, heights);
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const cap_error& e) {
        std::cerr << "construction cap: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
