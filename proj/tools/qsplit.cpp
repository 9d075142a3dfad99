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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qsplit/oracle.hpp"
#include "qsplit/serialization.hpp"

namespace {

using namespace qsplit;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSizeGuard = 3;

Json load_json(const std::string& input) {
    std::string text;
    if (!input.empty() && (input.front() == '{' || input.front() == '[')) {
        text = input;
    } else {
        std::ifstream in(input);
        if (!in) throw InvalidInputError("cannot open input file: " + input);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InvalidInputError(std::string("JSON parse error: ") + e.what());
    }
}

struct CommonOpts {
    std::string format = "json";
    unsigned long long seed = kDefaultFactorSeed;
    Int size_guard = kDefaultSizeGuard;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "seed for the factorization stream")
        ->capture_default_str();
    cmd->add_option("--size-guard", opts.size_guard, "largest permitted q^n for enumeration")
        ->capture_default_str();
}

void emit(const Json& j, const std::string& text, const CommonOpts& opts) {
    if (opts.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_analyze(const std::string& input, const CommonOpts& opts) {
    ExtensionSpec spec = spec_from_json(load_json(input));
    ExtensionReport report = analyze(spec, opts.size_guard);
    emit(report_to_json(report), report_to_text(report, spec.ctx), opts);
    return kExitOk;
}

int run_oracle(const std::string& input, const CommonOpts& opts) {
    ExtensionSpec spec = spec_from_json(load_json(input));
    OracleCount oracle = brute_force_count(spec, opts.size_guard);
    emit(oracle_to_json(oracle), oracle_to_text(oracle), opts);
    return kExitOk;
}

int run_verify(const std::string& input, const CommonOpts& opts) {
    ExtensionSpec spec = spec_from_json(load_json(input));
    ExtensionReport report = analyze(spec, opts.size_guard);
    OracleCount oracle = brute_force_count(spec, opts.size_guard);
    VerifyResult result = verify_report(report, oracle, spec);
    Json out;
    out["report"] = report_to_json(report);
    out["oracle"] = oracle_to_json(oracle);
    out["verify"] = verify_to_json(result);
    std::string text = report_to_text(report, spec.ctx) + oracle_to_text(oracle) +
                       verify_to_text(result);
    emit(out, text, opts);
    return result.verified ? kExitOk : kExitMismatch;
}

int run_tower(const std::string& input, const CommonOpts& opts) {
    ExtensionSpec spec = spec_from_json(load_json(input));
    TowerReport report = analyze_tower(spec.as_artin_schreier(), opts.size_guard);
    emit(tower_report_to_json(report), tower_report_to_text(report, spec.ctx), opts);
    return kExitOk;
}

int run_qs_check(const std::string& field, const std::string& poly, const CommonOpts& opts) {
    FieldCtx ctx = ctx_from_json(load_json(field));
    Poly f = poly_from_json(ctx, load_json(poly));
    Poly rep = reduce_mod_field_poly(f);
    bool semantic = is_quasisymmetric_semantic(rep, opts.size_guard);
    bool syntactic = is_quasisymmetric_syntactic(rep);
    bool lift_cyclic = lift_is_cyclic_invariant(lift(rep));
    bool fq_valued = maps_into_Fq(rep, opts.size_guard);
    bool zero_free = !rep.is_zero() && roots_in_field(rep, opts.seed).empty();
    Json out;
    out["semantic"] = semantic;
    out["syntactic"] = syntactic;
    out["lift_cyclic"] = lift_cyclic;
    out["fq_valued"] = fq_valued;
    out["zero_free"] = zero_free;
    std::ostringstream text;
    text << "semantic " << semantic << "\nsyntactic " << syntactic << "\nlift_cyclic "
         << lift_cyclic << "\nfq_valued " << fq_valued << "\nzero_free " << zero_free << "\n";
    emit(out, text.str(), opts);
    return kExitOk;
}

int run_qs_construct(const std::string& field, const std::string& method,
                     const std::string& outer, const std::string& inner, Int mexp,
                     const std::string& beta, const CommonOpts& opts) {
    FieldCtx ctx = ctx_from_json(load_json(field));
    Poly result(ctx);
    if (method == "compose") {
        if (outer.empty() || inner.empty())
            throw InvalidInputError("compose needs --irreducible and --inner");
        Poly i = poly_from_json(ctx, load_json(outer));
        Poly s = poly_from_json(ctx, load_json(inner));
        result = compose_with_irreducible(i, s, opts.size_guard);
    } else {
        if (inner.empty() || beta.empty())
            throw InvalidInputError("power needs --inner and --beta");
        Poly s = poly_from_json(ctx, load_json(inner));
        FFElement b = element_from_json(ctx, load_json(beta));
        result = power_minus_nonresidue(s, mexp, b, opts.size_guard);
    }
    Poly rep = reduce_mod_field_poly(result);
    Json out;
    out["poly"] = poly_to_json(result);
    Json certs;
    certs["quasisymmetric"] = is_quasisymmetric_syntactic(rep);
    certs["fq_valued"] = maps_into_Fq(rep, opts.size_guard);
    certs["zero_free"] = roots_in_field(result, opts.seed).empty();
    out["certificates"] = certs;
    std::ostringstream text;
    text << "constructed polynomial of degree " << result.degree() << "\n"
         << "quasisymmetric " << certs["quasisymmetric"].get<bool>() << ", fq_valued "
         << certs["fq_valued"].get<bool>() << ", zero_free " << certs["zero_free"].get<bool>()
         << "\n";
    emit(out, text.str(), opts);
    return kExitOk;
}

int run_factor(const std::string& field, const std::string& poly, const CommonOpts& opts) {
    FieldCtx ctx = ctx_from_json(load_json(field));
    Poly f = poly_from_json(ctx, load_json(poly));
    auto factors = factorize(f, opts.seed);
    Json out;
    out["leading"] = element_to_json(f.is_zero() ? ctx.zero() : f.leading());
    Json arr = Json::array();
    for (const auto& [fac, mult] : factors)
        arr.push_back(Json{{"poly", poly_to_json(fac)}, {"multiplicity", mult}});
    out["factors"] = std::move(arr);
    std::ostringstream text;
    text << factors.size() << " distinct irreducible factors\n";
    for (const auto& [fac, mult] : factors)
        text << "  degree " << fac.degree() << " multiplicity " << mult << "\n";
    emit(out, text.str(), opts);
    return kExitOk;
}

int run_orbits(const std::string& field, const CommonOpts& opts) {
    FieldCtx ctx = ctx_from_json(load_json(field));
    if (ctx.order() > opts.size_guard) throw SizeGuardError("field too large to enumerate orbits");
    auto orbits = ctx.galois_orbits();
    emit(orbits_to_json(orbits), orbits_to_text(orbits, ctx), opts);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-symmetric function field extension toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string input, field, poly, method = "compose", outer, inner, beta;
    Int mexp = 2;

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze an extension spec");
    analyze_cmd->add_option("--input", input, "spec file or inline JSON")->required();
    add_common(analyze_cmd, opts);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force count degree-1 places");
    oracle_cmd->add_option("--input", input, "spec file or inline JSON")->required();
    add_common(oracle_cmd, opts);

    auto* verify_cmd = app.add_subcommand("verify", "analyze, count, and compare");
    verify_cmd->add_option("--input", input, "spec file or inline JSON")->required();
    add_common(verify_cmd, opts);

    auto* tower_cmd = app.add_subcommand("tower", "degree-p subextension tower analysis");
    tower_cmd->add_option("--input", input, "spec file or inline JSON")->required();
    add_common(tower_cmd, opts);

    auto* qs_check_cmd = app.add_subcommand("qs-check", "quasi-symmetry verdicts for a polynomial");
    qs_check_cmd->add_option("--field", field, "field context JSON")->required();
    qs_check_cmd->add_option("--poly", poly, "polynomial JSON")->required();
    add_common(qs_check_cmd, opts);

    auto* qs_construct_cmd = app.add_subcommand("qs-construct", "build a zero-free member of V_qs");
    bool zero_free_flag = false;
    qs_construct_cmd->add_flag("--zero-free", zero_free_flag, "construct a zero-free polynomial");
    qs_construct_cmd->add_option("--field", field, "field context JSON")->required();
    qs_construct_cmd->add_option("--method", method, "compose or power")
        ->check(CLI::IsMember({"compose", "power"}))
        ->capture_default_str();
    qs_construct_cmd->add_option("--irreducible", outer, "outer polynomial JSON (compose)");
    qs_construct_cmd->add_option("--inner", inner, "inner V_qs polynomial JSON");
    qs_construct_cmd->add_option("--mexp", mexp, "power exponent")->capture_default_str();
    qs_construct_cmd->add_option("--beta", beta, "non-residue element JSON (power)");
    add_common(qs_construct_cmd, opts);

    auto* factor_cmd = app.add_subcommand("factor", "canonical irreducible factorization");
    factor_cmd->add_option("--field", field, "field context JSON")->required();
    factor_cmd->add_option("--poly", poly, "polynomial JSON")->required();
    add_common(factor_cmd, opts);

    auto* orbits_cmd = app.add_subcommand("orbits", "Galois orbit table of the field");
    orbits_cmd->add_option("--field", field, "field context JSON")->required();
    add_common(orbits_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(input, opts);
        if (oracle_cmd->parsed()) return run_oracle(input, opts);
        if (verify_cmd->parsed()) return run_verify(input, opts);
        if (tower_cmd->parsed()) return run_tower(input, opts);
        if (qs_check_cmd->parsed()) return run_qs_check(field, poly, opts);
        if (qs_construct_cmd->parsed())
            return run_qs_construct(field, method, outer, inner, mexp, beta, opts);
        if (factor_cmd->parsed()) return run_factor(field, poly, opts);
        if (orbits_cmd->parsed()) return run_orbits(field, opts);
    } catch (const SizeGuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
