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

#ifndef FFDYN_REPORT_HPP
#define FFDYN_REPORT_HPP

#include <json.hpp>

#include "ffdyn/classify.hpp"

namespace ffdyn {

/// All reports use insertion-ordered JSON so output is byte-stable.
using Json = nlohmann::ordered_json;

Json height_to_json(const HeightValue& h);
Json place_to_json(const Place& v);
Json iso_verdict_to_json(const IsoVerdict& v);
Json certificate_to_json(const PreperiodicCertificate& c);

/// refinedBound is the single floating-point field anywhere; it is
/// rendered with 6 significant digits.
Json refined_to_json(const std::optional<double>& refined);

Json analyze_report(PlaceContext& ctx, const PolyMap& phi, const std::string& field_name,
                    const std::string& map_text);
Json height_report(PlaceContext& ctx, const PolyMap& phi, const ProjPoint& x,
                   const std::string& field_name, const std::string& map_text,
                   const std::string& point_text, int budget);
Json preperiodic_report(PlaceContext& ctx, const PolyMap& phi, const ProjPoint& x,
                        const std::string& field_name, const std::string& map_text,
                        const std::string& point_text);
Json enumerate_report(PlaceContext& ctx, const PolyMap& phi, const std::string& field_name,
                      const std::string& map_text, long long degree_limit);
Json oracle_report(PlaceContext& ctx, const PolyMap& phi, const ProjPoint& x,
                   const std::string& field_name, const std::string& map_text,
                   const std::string& point_text);

/// Aligned key/value rendering of any report produced above.
std::string render_table(const Json& report);

} // namespace ffdyn

#endif
