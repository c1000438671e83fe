#pragma once

#include <algorithm>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "radnor/cli/commands.hpp"

namespace radnor::cli {

enum ExitCode : int { kOk = 0, kCertifiedFailure = 1, kUndecidable = 2, kMalformed = 3 };

/// Parses `args` (without the program name), runs one subcommand and writes its
/// report to `out`. Diagnostics go to `err`. Returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heights, towers and Northcott numbers of radical extensions", "radnor"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text";
    long precision = 128, max_precision = 4096;
    app.add_option("--format", format, "text | structured | csv")->capture_default_str();
    app.add_option("--precision", precision, "working precision in bits")->capture_default_str();
    app.add_option("--max-precision", max_precision, "precision cap for certified decisions")->capture_default_str();
    app.add_option("--conjugate-cap", cfg.conjugate_cap, "largest annihilator degree")->capture_default_str();

    std::function<Report()> action;

    std::string radical, gamma_text = "0";
    auto* height = app.add_subcommand("height", "weighted height of (m/n)^(1/D)");
    height->add_option("radical", radical, "(m/n)^(1/D)")->required();
    height->add_option("--gamma", gamma_text, "weight exponent")->capture_default_str();
    height->callback([&] { action = [&] { return cmd_height(radical, parse_rational(gamma_text), cfg); }; });

    std::string poly;
    auto* mahler = app.add_subcommand("mahler", "log Mahler measure of an integer polynomial");
    mahler->add_option("--poly", poly, "coefficients c0,c1,...,cn")->required();
    mahler->callback([&] { action = [&] { return cmd_mahler(poly, cfg); }; });

    auto* disc = app.add_subcommand("disc", "discriminant of an integer polynomial");
    disc->add_option("--poly", poly, "coefficients c0,c1,...,cn")->required();
    disc->callback([&] { action = [&] { return cmd_disc(poly); }; });

    std::string case_tag;
    std::optional<std::string> c_text, gamma_opt, d1_text, out_file;
    std::size_t levels = 3;
    auto* gen = app.add_subcommand("gen-tower", "generate a tower satisfying the level constraints");
    gen->add_option("--case", case_tag, "A | B1 | B2 | B3 | C")->required();
    gen->add_option("--c", c_text, "limit constant (A, B2)");
    gen->add_option("--gamma", gamma_opt, "weight exponent (B1, B2, B3)");
    gen->add_option("--levels", levels, "number of levels")->capture_default_str();
    gen->add_option("--d1", d1_text, "lower bound for the first level");
    gen->add_option("--out", out_file, "also write the spec document here");
    gen->callback([&] {
        action = [&] { return cmd_gen_tower(make_case(case_tag, c_text, gamma_opt), levels, d1_text, out_file, cfg); };
    });

    std::string spec_path;
    auto* verify = app.add_subcommand("verify-tower", "check every level constraint of a tower spec");
    verify->add_option("--spec", spec_path, "tower spec file")->required();
    verify->callback([&] { action = [&] { return cmd_verify_tower(load_spec(spec_path), cfg); }; });

    std::vector<std::string> delta_texts;
    auto* north = app.add_subcommand("northcott", "level bounds and Northcott sandwich of a tower spec");
    north->add_option("--spec", spec_path, "tower spec file")->required();
    north->add_option("--delta", delta_texts, "probe exponent (repeatable); default gamma-1/10, gamma, gamma+1/10");
    north->callback([&] {
        action = [&] {
            auto spec = load_spec(spec_path);
            std::vector<Rational> deltas;
            for (const auto& t : delta_texts) {
                deltas.push_back(parse_rational(t));
            }
            if (deltas.empty()) {
                deltas = default_deltas(spec.weight);
            }
            return cmd_northcott(spec, deltas, cfg);
        };
    });

    std::string log_norm, d_text, deg_k_text, p_text, q_text;
    auto* silv = app.add_subcommand("silverman", "Silverman lower bound for the height");
    silv->add_option("--log-norm-disc", log_norm, "log |N(disc)|: a rational, a decimal or log(N)")->required();
    silv->add_option("--d", d_text, "degree d")->required();
    silv->add_option("--deg-k", deg_k_text, "degree of the base field")->required();
    silv->callback([&] {
        action = [&] { return cmd_silverman(log_norm, parse_bigint(d_text), parse_bigint(deg_k_text), cfg); };
    });

    auto* cor = app.add_subcommand("corollary-bound", "log(p)/d - log(d)/(2(d-1))");
    cor->add_option("--p", p_text, "prime p")->required();
    cor->add_option("--d", d_text, "degree d")->required();
    cor->callback([&] { action = [&] { return cmd_corollary(parse_bigint(p_text), parse_bigint(d_text), cfg); }; });

    auto* div = app.add_subcommand("verify-divisibility", "p^(d-1), q^(d-1) | disc(x^d - p q^(d-1))");
    div->add_option("--p", p_text, "prime p")->required();
    div->add_option("--q", q_text, "prime q")->required();
    div->add_option("--d", d_text, "degree d")->required();
    div->callback([&] {
        action = [&] { return cmd_verify_divisibility(parse_bigint(p_text), parse_bigint(q_text), parse_bigint(d_text)); };
    });

    auto* cls = app.add_subcommand("classify", "Bogomolov and Northcott intervals for a weight case");
    cls->add_option("--case", case_tag, "A | B1 | B2 | B3 | C")->required();
    cls->add_option("--gamma", gamma_opt, "weight exponent");
    cls->add_option("--c", c_text, "limit constant (A, B2)");
    cls->callback([&] { action = [&] { return cmd_classify(make_case(case_tag, c_text, gamma_opt)); }; });

    std::string expr;
    auto* oh = app.add_subcommand("oracle-height", "height through the exact minimal polynomial");
    oh->add_option("--expr", expr, "a single radical, or a sum or product of two")->required();
    oh->callback([&] { action = [&] { return cmd_oracle_height(expr, cfg); }; });

    std::size_t samples = 20;
    auto* cc = app.add_subcommand("cross-check", "oracle heights of sample elements against the lower bound");
    cc->add_option("--p", p_text, "prime p")->required();
    cc->add_option("--q", q_text, "prime q")->required();
    cc->add_option("--d", d_text, "degree d")->required();
    cc->add_option("--samples", samples, "number of sample elements")->capture_default_str();
    cc->callback([&] {
        action = [&] {
            return cmd_cross_check(parse_bigint(p_text), parse_bigint(q_text), parse_bigint(d_text), samples, cfg);
        };
    });

    unsigned long n_max = 6;
    std::optional<std::string> b_text;
    auto* demo = app.add_subcommand("demo-negative", "weighted heights of 2^(1/3^n) for gamma <= 0");
    demo->add_option("--gamma", gamma_text, "weight exponent <= 0")->required();
    demo->add_option("--n", n_max, "largest n")->capture_default_str();
    demo->add_option("--b", b_text, "fixed radical b (default (5/7)^(1/5))");
    demo->callback([&] { action = [&] { return cmd_demo_negative(parse_rational(gamma_text), n_max, b_text, cfg); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kMalformed;
    }

    try {
        cfg.format = parse_format(format);
        cfg.precision = precision;
        cfg.max_precision = max_precision;
        cfg.validate();
        Report r = action();
        out << render(r, cfg.format);
        return r.exit_code;
    } catch (const UndecidableAtCap& e) {
        err << "undecidable: " << e.what() << "\n";
        return kUndecidable;
    } catch (const PrecisionExhausted& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return kUndecidable;
    } catch (const GenerationStuck& e) {
        err << "generation stuck: " << e.what() << "\n";
        return kUndecidable;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kMalformed;
    }
}

} // namespace radnor::cli
