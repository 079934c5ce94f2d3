#ifndef DETKIT_SERIALIZE_HPP
#define DETKIT_SERIALIZE_HPP

#include <json.hpp>

#include "detkit/auxpoly.hpp"
#include "detkit/coords.hpp"
#include "detkit/detmethod.hpp"
#include "detkit/form.hpp"
#include "detkit/intmatrix.hpp"
#include "detkit/point.hpp"

namespace detkit {

using json = nlohmann::json;

inline json to_json(const ProjPoint& p) { return json(p.coords()); }

inline json to_json(const std::vector<ProjPoint>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return a;
}

/// Entries as decimal strings: coefficients may exceed native word size.
inline json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const exactla::BvBound& b) {
    return json{{"gram_det", b.gram.get_str()},
                {"determinantal_divisor", b.divisor.get_str()},
                {"radicand_num", b.radicand.get_num().get_str()},
                {"radicand_den", b.radicand.get_den().get_str()},
                {"root_exponent", b.exponent},
                {"ceiling", b.ceiling.get_str()},
                {"approx", b.approx}};
}

inline json to_json(const detmethod::PrimeReport& r) {
    json clusters = json::array();
    for (const auto& c : r.clusters)
        clusters.push_back(json{{"residue", c.residue},
                                {"members", c.members},
                                {"multiplicity", c.members.size()},
                                {"smooth", c.smooth}});
    json j{{"p", r.p},
           {"is_bad", r.is_bad},
           {"clusters", clusters},
           {"guaranteed_valuation", r.guaranteed_valuation},
           {"delta", r.delta.get_str()}};
    if (r.observed_valuation)
        j["observed_valuation"] = *r.observed_valuation;
    else
        j["observed_valuation"] = "determinant zero";
    return j;
}

inline json to_json(const coords::NormalizeCertificate& c) {
    return json{{"tuple", c.tuple},
                {"ratio_num", c.ratio.get_num().get_str()},
                {"ratio_den", c.ratio.get_den().get_str()},
                {"norm_before", c.norm_before.get_str()},
                {"norm_after", c.norm_after.get_str()},
                {"c_after", c.c_after.get_str()},
                {"primitive", c.primitive},
                {"norm_ratio_num", c.norm_ratio.get_num().get_str()},
                {"norm_ratio_den", c.norm_ratio.get_den().get_str()},
                {"inflation_bound", c.inflation_bound.get_str()}};
}

inline json to_json(const auxpoly::AuxResult& r) {
    json j{{"g", r.g.to_string()},
           {"M", r.m},
           {"S", to_json(r.s_points)},
           {"xi", to_json(r.xi)},
           {"s", r.s},
           {"r", r.r},
           {"degenerate", r.degenerate},
           {"checks",
            {{"vanishes_on_S", r.vanishes_on_s},
             {"not_divisible_by_f", r.not_divisible_by_f},
             {"bezout_ok", r.bezout_ok}}}};
    if (r.bv) j["bv"] = to_json(*r.bv);
    return j;
}

}  // namespace detkit

#endif
