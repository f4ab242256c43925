/*
   Copyright 2026 The ffdyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ffdyn/report.hpp"

#include <cstdio>

namespace ffdyn {

Json height_to_json(const HeightValue& h) {
    if (h.is_exact()) return rat_to_string(h.exact_value());
    Json j;
    j["lo"] = rat_to_string(h.lo());
    j["hi"] = rat_to_string(h.hi());
    return j;
}

Json place_to_json(const Place& v) {
    Json j;
    j["generator"] = v.to_string();
    j["degree"] = v.degree();
    return j;
}

Json iso_verdict_to_json(const IsoVerdict& v) {
    Json j;
    j["kind"] = iso_verdict_name(v.kind);
    if (v.kind == IsoVerdict::Kind::NotIsotrivial) j["witnessIndex"] = *v.witness;
    if (v.kind == IsoVerdict::Kind::IsotrivialOverK) {
        Json g;
        g["a"] = v.gamma->a().to_string();
        g["b"] = v.gamma->b().to_string();
        j["gamma"] = g;
        j["constantMap"] = v.constant_map->to_string();
    }
    return j;
}

Json certificate_to_json(const PreperiodicCertificate& c) {
    Json j;
    switch (c.kind) {
        case PreperiodicCertificate::Kind::Cycle:
            j["kind"] = "Cycle";
            j["m"] = c.m;
            j["n"] = c.n;
            break;
        case PreperiodicCertificate::Kind::ExceedsCap: {
            j["kind"] = "ExceedsCap";
            j["cap"] = c.cap;
            Json pts = Json::array();
            for (const ProjPoint& p : c.distinct) pts.push_back(p.to_string());
            j["distinctPoints"] = pts;
            break;
        }
        case PreperiodicCertificate::Kind::Escape:
            j["kind"] = "Escape";
            j["place"] = c.escape_place->to_string();
            j["step"] = c.escape_step;
            break;
    }
    return j;
}

Json refined_to_json(const std::optional<double>& refined) {
    if (!refined) return nullptr;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", *refined);
    return std::stod(buf);
}

namespace {

Json base_report(const std::string& command, const std::string& field_name,
                 const std::string& map_text, const PolyMap& phi) {
    Json j;
    j["schemaVersion"] = 1;
    j["command"] = command;
    j["field"] = field_name;
    j["map"] = phi.to_string();
    j["input"] = map_text;
    j["degree"] = phi.degree();
    return j;
}

Json bad_places_json(const BadPlaceSet& S) {
    Json arr = Json::array();
    for (const Place& v : S.places) arr.push_back(place_to_json(v));
    return arr;
}

} // namespace

Json analyze_report(PlaceContext& ctx, const PolyMap& phi, const std::string& field_name,
                    const std::string& map_text) {
    Json j = base_report("analyze", field_name, map_text, phi);
    IsoVerdict verdict = is_isotrivial(ctx, phi);
    j["isoVerdict"] = iso_verdict_to_json(verdict);
    BadPlaceSet S = bad_places(ctx, phi);
    j["places"] = bad_places_json(S);
    j["s"] = S.size();
    if (verdict.is_over_k()) {
        j["cap"] = nullptr;
        j["refinedBound"] = nullptr;
    } else {
        BoundReport bounds = preperiodic_cap(ctx, phi);
        j["cap"] = bounds.cap;
        j["refinedBound"] = refined_to_json(bounds.refined);
    }
    GapConstant gap = height_gap_constant(ctx, phi);
    j["gapConstant"] = rat_to_string(gap.total);
    Json per = Json::array();
    for (const auto& [v, c] : gap.per_place) {
        Json e;
        e["place"] = v.to_string();
        e["value"] = rat_to_string(c);
        per.push_back(e);
    }
    j["gapPerPlace"] = per;
    return j;
}

Json height_report(PlaceContext& ctx, const PolyMap& phi, const ProjPoint& x,
                   const std::string& field_name, const std::string& map_text,
                   const std::string& point_text, int budget) {
    Json j = base_report("height", field_name, map_text, phi);
    j["point"] = point_text;
    j["standardHeight"] = standard_height(x);
    Json heights;
    heights["canonical"] = height_to_json(canonical_height(ctx, phi, x, budget));
    Json locals = Json::array();
    if (!x.is_infinity()) {
        for (const LocalHeightResult& r : local_canonical_heights(ctx, phi, x.value(), budget)) {
            Json e;
            e["place"] = r.place.to_string();
            e["degree"] = r.place.degree();
            e["value"] = height_to_json(r.value);
            e["escapeStep"] = r.escape_step ? Json(*r.escape_step) : Json(nullptr);
            e["certifiedZero"] = r.certified_zero;
            locals.push_back(e);
        }
    }
    heights["local"] = locals;
    j["heights"] = heights;
    return j;
}

Json preperiodic_report(PlaceContext& ctx, const PolyMap& phi, const ProjPoint& x,
                        const std::string& field_name, const std::string& map_text,
                        const std::string& point_text) {
    Json j = base_report("preperiodic", field_name, map_text, phi);
    j["point"] = point_text;
    auto [answer, cert] = is_preperiodic(ctx, phi, x);
    j["preperiodic"] = answer;
    j["certificates"] = Json::array({certificate_to_json(cert)});
    return j;
}

Json enumerate_report(PlaceContext& ctx, const PolyMap& phi, const std::string& field_name,
                      const std::string& map_text, long long degree_limit) {
    Json j = base_report("enumerate", field_name, map_text, phi);
    auto [points, bounds] = enumerate_preperiodic(ctx, phi, degree_limit);
    j["s"] = bounds.s;
    j["cap"] = bounds.cap;
    j["refinedBound"] = refined_to_json(bounds.refined);
    Json arr = Json::array();
    for (const ProjPoint& p : points) arr.push_back(p.to_string());
    j["preperiodicSet"] = arr;
    j["count"] = static_cast<long long>(points.size());
    return j;
}

Json oracle_report(PlaceContext& ctx, const PolyMap& phi, const ProjPoint& x,
                   const std::string& field_name, const std::string& map_text,
                   const std::string& point_text) {
    Json j = base_report("oracle", field_name, map_text, phi);
    j["point"] = point_text;
    j["preperiodic"] = oracle_preperiodic(ctx, phi, x);
    return j;
}

namespace {

void render_value(const Json& v, const std::string& prefix, std::string& out) {
    if (v.is_object()) {
        for (const auto& [key, val] : v.items())
            render_value(val, prefix.empty() ? key : prefix + "." + key, out);
    } else if (v.is_array()) {
        if (v.empty()) {
            out += prefix + ": []\n";
            return;
        }
        int i = 0;
        for (const auto& item : v) render_value(item, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out += prefix + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
}

} // namespace

std::string render_table(const Json& report) {
    std::string out;
    render_value(report, "", out);
    return out;
}

} // namespace ffdyn
