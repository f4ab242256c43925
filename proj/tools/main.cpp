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

#include <CLI11.hpp>

#include <iostream>

#include "ffdyn/errors.hpp"
#include "ffdyn/parser.hpp"
#include "ffdyn/report.hpp"

namespace {

// exit codes: 0 ok, 2 usage, 3 precondition violation, 4 resource limit
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;

int exit_code_for(ffdyn::ErrorCode c) {
    using EC = ffdyn::ErrorCode;
    switch (c) {
        case EC::SyntaxError:
        case EC::NotPolynomialInZ:
        case EC::DegreeTooLow:
        case EC::NotPrime:
            return kExitUsage;
        case EC::DegreeLimitExceeded:
        case EC::InsufficientSpecializationPoints:
        case EC::ResourceLimit:
            return kExitResource;
        default:
            return kExitPrecondition;
    }
}

ffdyn::ConstField parse_field_flag(const std::string& spec) {
    if (spec == "Q") return ffdyn::ConstField::rationals();
    if (spec.rfind("Fp:", 0) == 0) {
        unsigned long long p = 0;
        try {
            p = std::stoull(spec.substr(3));
        } catch (const std::exception&) {
            ffdyn::raise(ffdyn::ErrorCode::SyntaxError, "bad field spec '" + spec + "'");
        }
        return ffdyn::ConstField::prime_field(p);
    }
    ffdyn::raise(ffdyn::ErrorCode::SyntaxError,
                 "field must be 'Q' or 'Fp:<prime>', got '" + spec + "'");
}

void emit(const ffdyn::Json& report, const std::string& format) {
    if (format == "table")
        std::cout << ffdyn::render_table(report);
    else
        std::cout << report.dump(2) << "\n";
}

} // namespace

int run_selftest(); // selftest.cpp

int main(int argc, char** argv) {
    CLI::App app{"ffdyn: exact arithmetic dynamics over F(T) -- heights, reduction types and preperiodic points of polynomial maps"};
    app.require_subcommand(1);

    std::string field_spec = "Q";
    std::string map_text;
    std::string point_text;
    std::string format = "json";
    int budget = 64;
    long long degree_limit = 4096;

    auto add_common = [&](CLI::App* sub, bool needs_point) {
        sub->add_option("--field", field_spec, "constant field: Q or Fp:<prime>")->capture_default_str();
        sub->add_option("--map", map_text, "polynomial map in z, e.g. \"z^2 + T\"")->required();
        if (needs_point) sub->add_option("--point", point_text, "point in K, or 'inf'")->required();
        sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "reduction types, isotriviality and bounds");
    add_common(analyze, false);

    CLI::App* height = app.add_subcommand("height", "standard and canonical heights of a point");
    add_common(height, true);
    height->add_option("--budget", budget, "orbit iteration budget")->capture_default_str();

    CLI::App* preperiodic = app.add_subcommand("preperiodic", "decide preperiodicity with a certificate");
    add_common(preperiodic, true);

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "all K-rational preperiodic points");
    add_common(enumerate_cmd, false);
    enumerate_cmd->add_option("--degree-limit", degree_limit, "cap on iterate degree d^cap")
        ->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "finite-field preperiodicity oracle");
    add_common(oracle, true);

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in consistency suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(selftest)) return run_selftest();

        ffdyn::ConstField F = parse_field_flag(field_spec);
        ffdyn::PlaceContext ctx(F);
        ffdyn::PolyMap phi = ffdyn::parse_map(map_text, F);
        std::string field_name = F.to_string();

        if (app.got_subcommand(analyze)) {
            emit(ffdyn::analyze_report(ctx, phi, field_name, map_text), format);
        } else if (app.got_subcommand(height)) {
            ffdyn::ProjPoint x = ffdyn::parse_point(point_text, F);
            emit(ffdyn::height_report(ctx, phi, x, field_name, map_text, point_text, budget), format);
        } else if (app.got_subcommand(preperiodic)) {
            ffdyn::ProjPoint x = ffdyn::parse_point(point_text, F);
            emit(ffdyn::preperiodic_report(ctx, phi, x, field_name, map_text, point_text), format);
        } else if (app.got_subcommand(enumerate_cmd)) {
            emit(ffdyn::enumerate_report(ctx, phi, field_name, map_text, degree_limit), format);
        } else if (app.got_subcommand(oracle)) {
            ffdyn::ProjPoint x = ffdyn::parse_point(point_text, F);
            emit(ffdyn::oracle_report(ctx, phi, x, field_name, map_text, point_text), format);
        }
    } catch (const ffdyn::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
