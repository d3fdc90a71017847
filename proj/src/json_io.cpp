#include "zeta4/json_io.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace zeta4::json_io {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string decimal(const ExactInt& v) { return v.get_str(10); }

std::string decimal(const ExactRat& v) {
    ExactRat c(v);
    c.canonicalize();
    return c.get_str(10);
}

std::string decimal(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string decimal(const BigReal& v, int digits) { return v.to_string(digits); }

Eta parse_eta(const std::string& text) {
    std::istringstream in(text);
    std::vector<long> xs;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long x = 0;
        try {
            x = std::stol(tok, &used, 10);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw Error("invalid-input", "eta entry '" + tok + "' is not an integer");
        xs.push_back(x);
    }
    if (xs.size() != 8) throw Error("invalid-input", "eta needs 8 integers, got " + std::to_string(xs.size()));
    Eta eta;
    eta.e0 = xs[0];
    eta.em1 = xs[1];
    for (std::size_t j = 0; j < 6; ++j) eta.e[j] = xs[j + 2];
    return eta;
}

Json eta_json(const Eta& eta) {
    Json e = Json::array({eta.e0, eta.em1});
    for (long x : eta.e) e.push_back(x);
    return e;
}

Json directions_json(const DirectionPair& d) { return Json{{"alpha", d.alpha}, {"beta", d.beta}}; }

namespace {

const char* family_name(FormFamily f) { return f == FormFamily::Symmetric ? "symmetric" : "general"; }

}  // namespace

Json form_json(const LinearForm& f) {
    ExactRat v(f.v);
    v.canonicalize();
    return Json{{"n", f.n},
                {"family", family_name(f.family)},
                {"u", decimal(f.u)},
                {"v_num", decimal(ExactInt(v.get_num()))},
                {"v_den", decimal(ExactInt(v.get_den()))},
                {"m1", f.m1},
                {"m2", f.m2}};
}

LinearForm form_from_json(const Json& j) {
    LinearForm f;
    try {
        f.n = j.at("n").get<long>();
        f.family = j.at("family").get<std::string>() == "symmetric" ? FormFamily::Symmetric : FormFamily::General;
        f.u = ExactInt(j.at("u").get<std::string>(), 10);
        f.v = ExactRat(ExactInt(j.at("v_num").get<std::string>(), 10), ExactInt(j.at("v_den").get<std::string>(), 10));
        f.v.canonicalize();
        f.m1 = j.at("m1").get<long>();
        f.m2 = j.at("m2").get<long>();
    } catch (const std::exception& e) {
        throw Error("parse", std::string("linear form: ") + e.what());
    }
    return f;
}

Json omega_json(const OmegaReport& report, const RepSet& reps) {
    const auto& w = report.omega;
    Json cells = Json::array();
    std::set<int> contributing;
    auto rep_of = [&](std::size_t i) { return report.argmax.empty() ? -1 : report.argmax[i]; };
    for (std::size_t i = 0; i < w.values.size();) {
        std::size_t k = i + 1;
        while (k < w.values.size() && w.values[k] == w.values[i] && rep_of(k) == rep_of(i)) ++k;
        const ExactRat hi = k < w.breaks.size() ? w.breaks[k] : ExactRat(1);
        Json cell{{"lo", decimal(w.breaks[i])}, {"hi", decimal(hi)}, {"value", w.values[i]}};
        if (rep_of(i) >= 0) {
            cell["argmax"] = rep_of(i) + 1;
            contributing.insert(rep_of(i));
        } else {
            cell["argmax"] = nullptr;
        }
        cells.push_back(std::move(cell));
        i = k;
    }
    Json contrib = Json::array();
    for (int r : contributing) {
        const auto& e = reps.reps.at(static_cast<std::size_t>(r));
        contrib.push_back(Json{{"rep", r + 1}, {"word", e.g.word}, {"directions", directions_json(e.image)}});
    }
    int max_value = 0;
    for (int v : w.values) max_value = std::max(max_value, v);
    return Json{{"directions", directions_json(report.directions)},
                {"representatives", reps.reps.size()},
                {"cells", std::move(cells)},
                {"max_value", max_value},
                {"contributing", std::move(contrib)}};
}

Json extrapolation_json(const Extrapolation& e) {
    Json ex = Json::array();
    for (double x : e.extrapolants) ex.push_back(decimal(x, 10));
    return Json{{"value", decimal(e.value, 10)},
                {"uncertainty", decimal(e.uncertainty, 10)},
                {"extrapolants", std::move(ex)},
                {"residual", decimal(e.residual, 12)}};
}

Json growth_json(const GrowthEstimate& g) {
    Json lf = Json::array(), lu = Json::array();
    for (double x : g.log_abs_f) lf.push_back(decimal(x, 10));
    for (double x : g.log_abs_u) lu.push_back(decimal(x, 10));
    return Json{{"n_max", g.n_max},
                {"C0", extrapolation_json(g.c0)},
                {"C1", extrapolation_json(g.c1)},
                {"log_abs_F", std::move(lf)},
                {"log_abs_u", std::move(lu)},
                {"F_decreasing", g.f_decreasing},
                {"u_increasing", g.u_increasing}};
}

}  // namespace zeta4::json_io
