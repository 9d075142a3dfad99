/*
 * Copyright 2026 The qsplit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qsplit/serialization.hpp"

#include <set>
#include <sstream>

namespace qsplit {

namespace {

void require_object_keys(const Json& j, const std::set<std::string>& required,
                         const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw InvalidInputError("expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key))
            throw InvalidInputError("unknown key in JSON object: " + key);
    }
    for (const std::string& key : required)
        if (!j.contains(key)) throw InvalidInputError("missing key in JSON object: " + key);
}

Int get_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InvalidInputError(what + " must be an integer");
    return j.get<Int>();
}

} // namespace

Json element_to_json(const FFElement& a) {
    Json out = Json::array();
    for (Int c : a.c) out.push_back(c);
    return out;
}

FFElement element_from_json(const FieldCtx& ctx, const Json& j) {
    if (!j.is_array()) throw InvalidInputError("field element must be a JSON array");
    std::vector<Int> coeffs;
    for (const Json& c : j) coeffs.push_back(get_int(c, "element coefficient"));
    return ctx.element_from_coeffs(coeffs);
}

Json ctx_to_json(const FieldCtx& ctx) {
    Json out;
    out["p"] = ctx.p();
    out["m"] = ctx.m();
    out["n"] = ctx.n();
    out["modulus"] = ctx.modulus();
    return out;
}

FieldCtx ctx_from_json(const Json& j) {
    require_object_keys(j, {"p", "m", "n"}, {"modulus"});
    Int p = get_int(j.at("p"), "p");
    Int m = get_int(j.at("m"), "m");
    Int n = get_int(j.at("n"), "n");
    if (j.contains("modulus")) {
        if (!j.at("modulus").is_array()) throw InvalidInputError("modulus must be an array");
        std::vector<Int> mod;
        for (const Json& c : j.at("modulus")) mod.push_back(get_int(c, "modulus coefficient"));
        return FieldCtx(p, m, n, std::move(mod));
    }
    return FieldCtx(p, m, n);
}

Json poly_to_json(const Poly& f) {
    Json out = Json::array();
    for (const FFElement& c : f.coeffs()) out.push_back(element_to_json(c));
    return out;
}

Poly poly_from_json(const FieldCtx& ctx, const Json& j) {
    if (!j.is_array()) throw InvalidInputError("polynomial must be a JSON array");
    std::vector<FFElement> coeffs;
    for (const Json& c : j) coeffs.push_back(element_from_json(ctx, c));
    return Poly(ctx, std::move(coeffs));
}

Json spec_to_json(const ExtensionSpec& spec) {
    Json out;
    out["field"] = ctx_to_json(spec.ctx);
    out["kind"] = spec.kind == ExtensionSpec::Kind::artin_schreier ? "artin_schreier" : "kummer";
    if (spec.kind == ExtensionSpec::Kind::artin_schreier) {
        if (spec.lhs.kind == LinearizedLhs::Kind::full_trace)
            out["lhs"] = "full_trace";
        else
            out["lhs"] = Json{{"p_step", element_to_json(spec.lhs.b)}};
    }
    if (spec.kind == ExtensionSpec::Kind::kummer && spec.kummer_d.has_value())
        out["d"] = *spec.kummer_d;
    out["h"] = poly_to_json(spec.h);
    out["g"] = poly_to_json(spec.g);
    out["qs_certified"] = spec.qs_certified;
    return out;
}

ExtensionSpec spec_from_json(const Json& j) {
    require_object_keys(j, {"field", "kind", "h", "g"}, {"lhs", "d", "qs_certified"});
    FieldCtx ctx = ctx_from_json(j.at("field"));
    std::string kind_str = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    ExtensionSpec::Kind kind;
    if (kind_str == "artin_schreier")
        kind = ExtensionSpec::Kind::artin_schreier;
    else if (kind_str == "kummer")
        kind = ExtensionSpec::Kind::kummer;
    else
        throw InvalidInputError("kind must be \"artin_schreier\" or \"kummer\"");
    LinearizedLhs lhs = LinearizedLhs::full_trace();
    std::optional<Int> kummer_d;
    if (kind == ExtensionSpec::Kind::artin_schreier) {
        if (!j.contains("lhs")) throw InvalidInputError("artin_schreier spec needs \"lhs\"");
        const Json& lj = j.at("lhs");
        if (lj.is_string() && lj.get<std::string>() == "full_trace") {
            lhs = LinearizedLhs::full_trace();
        } else if (lj.is_object()) {
            require_object_keys(lj, {"p_step"});
            lhs = LinearizedLhs::p_step(ctx, element_from_json(ctx, lj.at("p_step")));
        } else {
            throw InvalidInputError("lhs must be \"full_trace\" or {\"p_step\": element}");
        }
        if (j.contains("d")) throw InvalidInputError("\"d\" is a Kummer-only key");
    } else {
        if (j.contains("lhs")) throw InvalidInputError("\"lhs\" is an Artin-Schreier-only key");
        if (j.contains("d")) kummer_d = get_int(j.at("d"), "d");
    }
    Poly h = poly_from_json(ctx, j.at("h"));
    Poly g = poly_from_json(ctx, j.at("g"));
    bool qs_certified = j.value("qs_certified", false);
    return ExtensionSpec{kind, std::move(ctx), std::move(lhs), kummer_d, std::move(h),
                         std::move(g), qs_certified};
}

Json place_to_json(const PlaceId& place) {
    Json out;
    if (place.at_infinity) {
        out["kind"] = "infinity";
    } else {
        out["kind"] = "finite";
        out["prime"] = poly_to_json(*place.prime);
    }
    out["degree"] = place.degree;
    return out;
}

Json report_to_json(const ExtensionReport& report) {
    Json out;
    out["degree"] = report.degree;
    Json verdicts = Json::array();
    for (const PlaceVerdict& v : report.verdicts) {
        Json jv;
        jv["place"] = place_to_json(v.place);
        jv["valuation"] = v.valuation;
        jv["status"] = to_string(v.status);
        jv["ramification_index"] = v.ramification_index;
        jv["different_exponent"] = v.different_exponent;
        jv["places_above_degree1"] = v.places_above_degree1;
        jv["theorem_backed"] = v.theorem_backed;
        verdicts.push_back(std::move(jv));
    }
    out["verdicts"] = std::move(verdicts);
    out["deg_different"] = report.deg_different;
    out["genus"] = report.genus.has_value() ? Json(*report.genus) : Json(nullptr);
    out["n_rational"] = report.n_rational;
    out["counts_complete"] = report.counts_complete;
    out["ratio"] = Json{{"num", report.ratio.first}, {"den", report.ratio.second}};
    return out;
}

Json oracle_to_json(const OracleCount& oracle) {
    Json out;
    Json arr = Json::array();
    for (Int c : oracle.per_alpha) arr.push_back(c < 0 ? Json(nullptr) : Json(c));
    out["per_alpha"] = std::move(arr);
    out["infinity_count"] =
        oracle.infinity_count.has_value() ? Json(*oracle.infinity_count) : Json("analysis-delegated");
    out["total_degree1"] = oracle.total_degree1;
    return out;
}

Json verify_to_json(const VerifyResult& result) {
    Json out;
    out["verdict"] = result.verified ? "verified" : "mismatch";
    Json ms = Json::array();
    for (const VerifyMismatch& m : result.mismatches)
        ms.push_back(Json{{"place", m.place}, {"analysis", m.analysis}, {"oracle", m.oracle}});
    out["mismatches"] = std::move(ms);
    out["delegated"] = result.delegated;
    out["analysis_total"] = result.analysis_total;
    out["combined_total"] = result.combined_total;
    return out;
}

Json orbits_to_json(const std::vector<std::vector<FFElement>>& orbits) {
    Json out = Json::array();
    for (const auto& orbit : orbits) {
        Json jo = Json::array();
        for (const FFElement& a : orbit) jo.push_back(element_to_json(a));
        out.push_back(std::move(jo));
    }
    return out;
}

Json tower_steps_to_json(const std::vector<TowerStep>& steps) {
    Json out = Json::array();
    for (const TowerStep& s : steps)
        out.push_back(Json{{"index", s.index}, {"B", element_to_json(s.B)}});
    return out;
}

Json tower_report_to_json(const TowerReport& report) {
    Json out;
    out["steps"] = tower_steps_to_json(report.steps);
    out["degree1_counts"] = report.degree1_counts;
    Json infs = Json::array();
    for (const TowerStepInfinity& s : report.infinity_steps)
        infs.push_back(Json{{"step", s.step},
                            {"pole_order", s.pole_order},
                            {"different_exponent", s.different_exponent}});
    out["infinity_steps"] = std::move(infs);
    out["composite_infinity_different"] = report.composite_infinity_different;
    out["deg_different"] = report.deg_different;
    out["genus"] = report.genus.has_value() ? Json(*report.genus) : Json(nullptr);
    out["n_rational"] = report.n_rational;
    return out;
}

// ---- text renderings -----------------------------------------------------------

namespace {

std::string render_element(const FieldCtx& ctx, const FFElement& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) os << ",";
        os << a.c[i];
    }
    os << "]";
    (void)ctx;
    return os.str();
}

std::string render_place(const FieldCtx& ctx, const PlaceId& place) {
    if (place.at_infinity) return "P_inf";
    if (place.degree == 1) {
        FFElement alpha = ctx.neg(place.prime->coeff(0));
        return "P_alpha " + render_element(ctx, alpha);
    }
    std::ostringstream os;
    os << "P(";
    const auto& cs = place.prime->coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) os << " ";
        os << render_element(ctx, cs[i]);
    }
    os << ")";
    return os.str();
}

} // namespace

std::string report_to_text(const ExtensionReport& report, const FieldCtx& ctx) {
    std::ostringstream os;
    os << "extension degree " << report.degree << " over F_" << ctx.order() << "(x)\n";
    for (const PlaceVerdict& v : report.verdicts) {
        os << "  " << render_place(ctx, v.place) << " (deg " << v.place.degree
           << "): v=" << v.valuation << " " << to_string(v.status);
        if (v.status == PlaceStatus::totally_ramified || v.status == PlaceStatus::tame_ramified)
            os << " e=" << v.ramification_index << " d=" << v.different_exponent;
        os << " deg1_above=" << v.places_above_degree1;
        if (v.theorem_backed) os << " [theorem]";
        os << "\n";
    }
    os << "deg_different " << report.deg_different << "\n";
    if (report.genus.has_value())
        os << "genus " << *report.genus << "\n";
    else
        os << "genus unresolved\n";
    os << "N(E) " << report.n_rational << (report.counts_complete ? "" : " (incomplete)") << "\n";
    os << "N/[E:F] " << report.ratio.first << "/" << report.ratio.second << "\n";
    return os.str();
}

std::string oracle_to_text(const OracleCount& oracle) {
    std::ostringstream os;
    os << "oracle counts per alpha (value order):";
    for (Int c : oracle.per_alpha) {
        os << " ";
        if (c < 0)
            os << "-";
        else
            os << c;
    }
    os << "\ninfinity: ";
    if (oracle.infinity_count.has_value())
        os << *oracle.infinity_count;
    else
        os << "analysis-delegated";
    os << "\ntotal_degree1 " << oracle.total_degree1 << "\n";
    return os.str();
}

std::string verify_to_text(const VerifyResult& result) {
    std::ostringstream os;
    os << (result.verified ? "verified" : "MISMATCH") << "\n";
    for (const VerifyMismatch& m : result.mismatches)
        os << "  mismatch at " << m.place << ": analysis " << m.analysis << " vs oracle "
           << m.oracle << "\n";
    for (const std::string& d : result.delegated) os << "  delegated: " << d << "\n";
    os << "analysis_total " << result.analysis_total << ", combined_total "
       << result.combined_total << "\n";
    return os.str();
}

std::string orbits_to_text(const std::vector<std::vector<FFElement>>& orbits, const FieldCtx& ctx) {
    std::ostringstream os;
    os << orbits.size() << " orbits\n";
    for (const auto& orbit : orbits) {
        os << " ";
        for (const FFElement& a : orbit) os << " " << render_element(ctx, a);
        os << "\n";
    }
    return os.str();
}

std::string tower_report_to_text(const TowerReport& report, const FieldCtx& ctx) {
    std::ostringstream os;
    os << report.steps.size() << " tower steps\n";
    for (const TowerStep& s : report.steps)
        os << "  step " << s.index << ": B = " << render_element(ctx, s.B) << "\n";
    for (const TowerStepInfinity& s : report.infinity_steps)
        os << "  infinity step " << s.step << ": pole order " << s.pole_order
           << ", different exponent " << s.different_exponent << "\n";
    if (!report.infinity_steps.empty())
        os << "  composite infinity different " << report.composite_infinity_different << "\n";
    os << "deg_different " << report.deg_different << "\n";
    if (report.genus.has_value())
        os << "genus " << *report.genus << "\n";
    else
        os << "genus unresolved\n";
    os << "N(E) " << report.n_rational << "\n";
    return os.str();
}

} // namespace qsplit
