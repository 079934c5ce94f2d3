#include "detkit/form.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "detkit/errors.hpp"

namespace detkit {

int rtl_lex_cmp(const Exponents& a, const Exponents& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace forms {

namespace {

void map_add(TermMap& dst, const Exponents& e, const mpz_class& c) {
    auto it = dst.find(e);
    if (it == dst.end()) {
        if (c != 0) dst.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) dst.erase(it);
}

TermMap map_mul(const TermMap& a, const TermMap& b, std::size_t nvars) {
    TermMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(nvars);
            for (std::size_t i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
            map_add(out, e, ca * cb);
        }
    return out;
}

}  // namespace

Form::Form(std::size_t nvars, TermMap terms) : nvars_(nvars), terms_(std::move(terms)) {
    if (terms_.empty()) throw domain_error("Form: zero polynomial is not a Form");
    degree_ = -1;
    for (const auto& [e, c] : terms_) {
        if (e.size() != nvars_) throw domain_error("Form: exponent vector length mismatch");
        if (c == 0) throw domain_error("Form: zero coefficient stored");
        int d = 0;
        for (int x : e) {
            if (x < 0) throw domain_error("Form: negative exponent");
            d += x;
        }
        if (degree_ < 0)
            degree_ = d;
        else if (d != degree_)
            throw parse_error("Form: inhomogeneous term set");
    }
}

Form Form::parse(const std::string& text, std::size_t nvars) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw parse_error("parse_form: empty input");

    TermMap terms;
    std::size_t pos = 0;
    auto read_uint = [&]() -> mpz_class {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("parse_form: expected digits at offset " +
                                            std::to_string(start));
        return mpz_class(s.substr(start, pos - start));
    };

    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!terms.empty() && pos > 0) {
            throw parse_error("parse_form: expected '+' or '-' between terms");
        }
        mpz_class coeff = sign;
        Exponents e(nvars, 0);
        bool any_factor = false;
        while (pos < s.size()) {
            if (s[pos] == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                coeff *= read_uint();
                any_factor = true;
            } else if (s[pos] == 'x') {
                ++pos;
                mpz_class idx = read_uint();
                if (idx >= mpz_class(static_cast<long>(nvars)))
                    throw parse_error("parse_form: variable index out of range: x" +
                                      idx.get_str());
                int exp = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    exp = static_cast<int>(read_uint().get_si());
                }
                e[idx.get_ui()] += exp;
                any_factor = true;
            } else if (s[pos] == '+' || s[pos] == '-') {
                break;
            } else {
                throw parse_error(std::string("parse_form: unexpected character '") +
                                  s[pos] + "'");
            }
        }
        if (!any_factor) throw parse_error("parse_form: empty term");
        map_add(terms, e, coeff);
    }
    if (terms.empty()) throw parse_error("parse_form: polynomial is zero");
    try {
        return Form(nvars, std::move(terms));
    } catch (const parse_error&) {
        throw parse_error("parse_form: terms have unequal total degree");
    }
}

mpz_class Form::norm() const {
    mpz_class m = 0;
    for (const auto& [e, c] : terms_)
        if (abs(c) > m) m = abs(c);
    return m;
}

mpz_class Form::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Form Form::primitivized() const {
    mpz_class g = content();
    if (g == 1) return *this;
    TermMap t;
    for (const auto& [e, c] : terms_) t.emplace(e, c / g);
    return Form(nvars_, std::move(t));
}

mpz_class Form::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class Form::last_var_coefficient() const {
    Exponents e(nvars_, 0);
    e[nvars_ - 1] = degree_;
    return coefficient(e);
}

mpz_class evaluate_monomial(const Exponents& e, const std::vector<mpz_class>& point) {
    mpz_class v = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) v *= point[i];
    return v;
}

mpz_class Form::evaluate(const std::vector<mpz_class>& point) const {
    if (point.size() != nvars_) throw domain_error("evaluate: point length mismatch");
    mpz_class acc = 0;
    for (const auto& [e, c] : terms_) acc += c * evaluate_monomial(e, point);
    return acc;
}

mpz_class Form::evaluate(const std::vector<long long>& point) const {
    return evaluate(to_mpz_vec(point));
}

mpz_class Form::partial_at(std::size_t k, const std::vector<long long>& point) const {
    mpz_class acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        mpz_class v = c * e[k];
        for (std::size_t i = 0; i < nvars_; ++i) {
            int exp = e[i] - (i == k ? 1 : 0);
            for (int t = 0; t < exp; ++t) v *= to_mpz(point[i]);
        }
        acc += v;
    }
    return acc;
}

std::pair<Exponents, mpz_class> Form::leading_term_rtl() const {
    const auto& [e, c] = *terms_.begin();
    return {e, c};
}

Form Form::multiply(const Form& g) const {
    if (nvars_ != g.nvars_) throw domain_error("multiply: nvars mismatch");
    return Form(nvars_, map_mul(terms_, g.terms_, nvars_));
}

std::optional<Form> Form::divides(const Form& dividend) const {
    if (nvars_ != dividend.nvars_) throw domain_error("divides: nvars mismatch");
    if (dividend.degree_ < degree_) return std::nullopt;

    // exact division by repeated RTL leading-term elimination, over the
    // rationals; accept only an integral quotient with zero remainder
    using QMap = std::map<Exponents, mpq_class, RtlLexDesc>;
    QMap rem;
    for (const auto& [e, c] : dividend.terms_) rem.emplace(e, mpq_class(c));
    const auto& [lf, cf] = *terms_.begin();

    QMap quot;
    while (!rem.empty()) {
        const auto& [lr, cr] = *rem.begin();
        Exponents q(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            q[i] = lr[i] - lf[i];
            if (q[i] < 0) return std::nullopt;
        }
        mpq_class qc = cr / mpq_class(cf);
        quot.emplace(q, qc);
        for (const auto& [e, c] : terms_) {
            Exponents t(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) t[i] = q[i] + e[i];
            auto it = rem.find(t);
            mpq_class nv = (it == rem.end() ? mpq_class(0) : it->second) - qc * c;
            if (it != rem.end()) rem.erase(it);
            if (nv != 0) rem.emplace(t, nv);
        }
    }
    TermMap h;
    for (const auto& [e, c] : quot) {
        if (c.get_den() != 1) return std::nullopt;
        h.emplace(e, c.get_num());
    }
    if (h.empty()) return std::nullopt;
    return Form(nvars_, std::move(h));
}

Form Form::compose_linear(const IntMatrix& a) const {
    if (a.rows() != nvars_ || a.cols() != nvars_)
        throw domain_error("compose_linear: matrix shape mismatch");
    mpz_class d = exactla::det(a);
    if (d != 1 && d != -1) throw domain_error("compose_linear: matrix not unimodular");

    // substituted linear forms L_i = sum_j a(i,j) x_j, with cached powers
    std::vector<TermMap> linear(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
        for (std::size_t j = 0; j < nvars_; ++j)
            if (a(i, j) != 0) {
                Exponents e(nvars_, 0);
                e[j] = 1;
                linear[i].emplace(e, a(i, j));
            }
    std::vector<std::vector<TermMap>> pow(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        TermMap unit;
        unit.emplace(Exponents(nvars_, 0), mpz_class(1));
        pow[i].push_back(std::move(unit));
    }
    auto power_of = [&](std::size_t i, int e) -> const TermMap& {
        while (static_cast<int>(pow[i].size()) <= e)
            pow[i].push_back(map_mul(pow[i].back(), linear[i], nvars_));
        return pow[i][e];
    };

    TermMap out;
    for (const auto& [e, c] : terms_) {
        TermMap prod;
        prod.emplace(Exponents(nvars_, 0), c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) prod = map_mul(prod, power_of(i, e[i]), nvars_);
        for (const auto& [pe, pc] : prod) map_add(out, pe, pc);
    }
    return Form(nvars_, std::move(out));
}

std::string Form::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class ac = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (ac != 1) {
            os << ac;
            printed = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << '*';
            os << 'x' << i;
            if (e[i] > 1) os << '^' << e[i];
            printed = true;
        }
        if (!printed) os << ac;  // degree-0 form with unit coefficient
    }
    return os.str();
}

}  // namespace forms
}  // namespace detkit
