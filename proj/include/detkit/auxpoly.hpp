#ifndef DETKIT_AUXPOLY_HPP
#define DETKIT_AUXPOLY_HPP

#include <optional>
#include <vector>

#include "detkit/constants.hpp"
#include "detkit/detmethod.hpp"
#include "detkit/form.hpp"
#include "detkit/intmatrix.hpp"
#include "detkit/point.hpp"

namespace detkit {
namespace auxpoly {

/// Certificate of the auxiliary-form construction: a form g of degree M
/// vanishing on every enumerated point of f but not divisible by f.
struct AuxResult {
    Form g;
    int m = 0;                       // degree of g
    std::vector<ProjPoint> s_points; // all points of height <= N
    std::vector<ProjPoint> xi;       // selected independent tuple
    std::size_t s = 0;               // rank of the tuple
    std::size_t r = 0;               // |B[M]|
    std::optional<exactla::BvBound> bv;
    bool vanishes_on_s = false;
    bool not_divisible_by_f = false;
    bool bezout_ok = false;
    bool degenerate = false;         // empty point set, vacuous certificate
};

/// Target degree ceil(c_m * N^{(n+1)/(n d^{1/n})} * L * ||f||^{-1/(n d^{1+1/n})})
/// with L = log||f|| + c_add (just c_add when ||f|| = 1), floored at d.
int degree_bound(int d, int n, long long n_height, const mpz_class& normf,
                 const BoundConstants& c);

struct ConstructOptions {
    std::optional<int> m_start;      // default: degree_bound
    bool allow_escalation = true;
    unsigned long long cell_budget = 1'000'000'000;
    unsigned threads = 1;
};

/// The construction: enumerate points, select an independent tuple at degree
/// M, and extract a kernel vector of the evaluation matrix outside the
/// f*B[M-d] coefficient lattice. Escalates M while the rank equals the
/// Hilbert threshold |B[M]| - |B[M-d]|; hard cap at 4x degree_bound
/// (cap_error beyond it).
AuxResult construct(const Form& f, long long n_height,
                    const BoundConstants& constants,
                    const ConstructOptions& opts = {});

/// Necessary Bezout consistency: |S| <= deg f * deg g, for plane curves.
/// Requires f not dividing g.
bool bezout_check(const Form& f, const Form& g, const std::vector<ProjPoint>& s);

/// Both sides of the proof's comparison, reported numerically and asserted
/// nowhere.
struct AuditReport {
    double gram_log_upper;   // (n+2) s log s + M s log N
    double divisor_log_lower;  // the gcd-of-determinants calculator
    double lhs_final;        // n d^{1/n}/(n+1) (log M + c - max(loglog||f||,0))
    double rhs_final;        // log N - log||f|| / (d(n+1))
    bool contradiction;      // lhs_final > rhs_final
};
AuditReport audit_inequality(double s, double m, double n_height,
                             const mpz_class& normf, int d, int n,
                             const BoundConstants& c);

/// Point-count bound calculator:
/// N^{2/d} (log||f|| + c_add) ||f||^{-1/d^2} + c_add  (log factor = c_add at
/// ||f|| = 1).
double count_points_bound(int d, int n, double n_height, const mpz_class& normf,
                          const BoundConstants& c);

}  // namespace auxpoly
}  // namespace detkit

#endif
