#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "radnor/northcott/demo.hpp"
#include "radnor/northcott/sandwich.hpp"
#include "radnor/oracle/minimal_poly.hpp"
#include "radnor/towers/classify.hpp"
#include "radnor/towers/constraints.hpp"

namespace radnor::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Structured, Csv };

inline Format parse_format(std::string_view s) {
    if (s == "text") {
        return Format::Text;
    }
    if (s == "structured") {
        return Format::Structured;
    }
    if (s == "csv") {
        return Format::Csv;
    }
    throw ParseError("unknown format '" + std::string(s) + "' (expected text, structured or csv)");
}

struct RunConfig {
    mpfr_prec_t precision = 128;
    mpfr_prec_t max_precision = 4096;
    unsigned long conjugate_cap = 256;
    Format format = Format::Text;

    void validate() const {
        if (precision < 16) {
            throw InvalidArgument("--precision must be at least 16");
        }
        if (precision > max_precision) {
            throw InvalidArgument("--precision must not exceed --max-precision");
        }
        if (conjugate_cap < 1) {
            throw InvalidArgument("--conjugate-cap must be positive");
        }
    }

    PrecisionLadder ladder() const { return {std::min<mpfr_prec_t>(64, max_precision), max_precision}; }
    int digits() const { return static_cast<int>(static_cast<double>(precision) * 0.30103) + 2; }
};

struct Report {
    Json doc;
    std::string text;
    std::optional<std::string> csv;
    int exit_code = 0;
};

namespace detail {

inline Json enclosure_json(const CertifiedReal& x, int digits) {
    return Json{{"lo", x.lo().to_string(digits, MPFR_RNDD)}, {"hi", x.hi().to_string(digits, MPFR_RNDU)}};
}

inline std::string enclosure_text(const CertifiedReal& x, int digits) { return x.to_string(digits); }

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

/// key,value rows for the scalar and enclosure fields of a document.
inline std::string key_value_csv(const Json& doc) {
    std::ostringstream out;
    out << "key,value\n";
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const auto& v = it.value();
        if (v.is_object() && v.contains("lo") && v.contains("hi") && v.size() == 2) {
            out << it.key() << "_lo," << v["lo"].get<std::string>() << "\n";
            out << it.key() << "_hi," << v["hi"].get<std::string>() << "\n";
        } else if (v.is_string()) {
            out << it.key() << "," << csv_escape(v.get<std::string>()) << "\n";
        } else if (v.is_primitive()) {
            out << it.key() << "," << v.dump() << "\n";
        }
    }
    return out.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline Json level_json(const TowerLevel& l) { return Json{{"d", l.d.get_str()}, {"p", l.p.get_str()}, {"q", l.q.get_str()}}; }

inline Json weight_json(const WeightCase& w) {
    return Json{{"case", to_string(w.tag)},
                {"gamma", to_string(w.gamma)},
                {"c", w.c ? Json(to_string(*w.c)) : Json(nullptr)}};
}

} // namespace detail

inline std::string render(const Report& r, Format f) {
    switch (f) {
    case Format::Structured: return r.doc.dump(2) + "\n";
    case Format::Csv: return r.csv ? *r.csv : detail::key_value_csv(r.doc);
    case Format::Text: return r.text;
    }
    return r.text;
}

/// height <radical> [--gamma g]
inline Report cmd_height(const std::string& radical_text, const Rational& gamma, const RunConfig& cfg) {
    auto r = parse_radical(radical_text);
    auto w = weighted_height(r, gamma, cfg.precision);
    Report out;
    out.doc = Json{{"command", "height"},
                   {"radical", r.to_string()},
                   {"degree", w.degree},
                   {"gamma", to_string(gamma)},
                   {"height_exact", height(r).to_string()},
                   {"exact", w.exact ? Json(w.exact->to_string()) : Json(nullptr)},
                   {"enclosure", detail::enclosure_json(w.enclosure, cfg.digits())}};
    std::ostringstream t;
    t << "radical: " << r << "\n"
      << "degree: " << w.degree << "\n"
      << "gamma: " << to_string(gamma) << "\n"
      << "height: " << height(r) << "\n";
    if (w.exact) {
        t << "weighted height: " << *w.exact << "\n";
    } else {
        t << "weighted height: " << w.degree << "^(" << to_string(gamma) << ") * " << height(r) << "\n";
    }
    t << "enclosure: " << detail::enclosure_text(w.enclosure, cfg.digits()) << "\n";
    out.text = t.str();
    return out;
}

/// mahler --poly c0,c1,...
inline Report cmd_mahler(const std::string& coeffs, const RunConfig& cfg) {
    auto f = parse_polynomial(coeffs);
    auto m = log_mahler(f, cfg.precision);
    Report out;
    out.doc = Json{{"command", "mahler"},
                   {"polynomial", format_coefficients(f)},
                   {"degree", f.degree()},
                   {"log_mahler", detail::enclosure_json(m, cfg.digits())}};
    out.text = "polynomial: " + to_string(f) + "\nlog M: " + detail::enclosure_text(m, cfg.digits()) + "\n";
    return out;
}

/// disc --poly c0,c1,...
inline Report cmd_disc(const std::string& coeffs) {
    auto f = parse_polynomial(coeffs);
    auto d = discriminant(f);
    Report out;
    out.doc = Json{{"command", "disc"}, {"polynomial", format_coefficients(f)}, {"degree", f.degree()},
                   {"discriminant", d.get_str()}};
    out.text = "polynomial: " + to_string(f) + "\ndiscriminant: " + d.get_str() + "\n";
    return out;
}

inline WeightCase make_case(const std::string& tag, const std::optional<std::string>& c,
                            const std::optional<std::string>& gamma) {
    std::optional<Rational> cv, gv;
    if (c) {
        cv = parse_rational(*c);
    }
    if (gamma) {
        gv = parse_rational(*gamma);
    }
    return WeightCase::make(parse_case_tag(tag), cv, gv);
}

inline Json spec_json(const TowerSpec& spec) {
    Json levels = Json::array();
    for (const auto& l : spec.levels) {
        levels.push_back(detail::level_json(l));
    }
    Json j = detail::weight_json(spec.weight);
    j["base"] = kBaseFieldDescriptor;
    j["levels"] = levels;
    return j;
}

/// gen-tower --case X [--c c] [--gamma g] --levels N [--d1 hint] [--out file]
inline Report cmd_gen_tower(const WeightCase& w, std::size_t levels, const std::optional<std::string>& d1,
                            const std::optional<std::string>& out_file, const RunConfig& cfg) {
    GenerateOptions options;
    options.ladder = cfg.ladder();
    options.max_bits = static_cast<unsigned long>(cfg.max_precision);
    std::optional<BigInt> hint;
    if (d1) {
        hint = parse_bigint(*d1);
    }
    auto spec = generate_tower(w, levels, hint, options);
    std::string document = serialize(spec);
    if (out_file) {
        std::ofstream f(*out_file, std::ios::binary);
        if (!f || !(f << document)) {
            throw ParseError("cannot write '" + *out_file + "'");
        }
    }
    Report out;
    out.doc = Json{{"command", "gen-tower"}, {"spec", spec_json(spec)}};
    out.text = document;
    std::ostringstream csv;
    csv << "level,d,p,q\n";
    for (std::size_t i = 0; i < spec.levels.size(); ++i) {
        csv << i + 1 << "," << spec.levels[i].d << "," << spec.levels[i].p << "," << spec.levels[i].q << "\n";
    }
    out.csv = csv.str();
    return out;
}

inline TowerSpec load_spec(const std::string& path) { return parse_tower_spec(detail::read_file(path)); }

/// verify-tower --spec file
inline Report cmd_verify_tower(const TowerSpec& spec, const RunConfig& cfg) {
    auto reports = check_tower(spec, cfg.ladder());
    Report out;
    Json levels = Json::array();
    std::ostringstream t, csv;
    csv << "level,constraint,required,holds,detail\n";
    bool all = true;
    for (const auto& r : reports) {
        Json cs = Json::array();
        t << "level " << r.level << " (d=" << spec.levels[r.level - 1].d << ", p=" << spec.levels[r.level - 1].p
          << ", q=" << spec.levels[r.level - 1].q << "): " << (r.all_required_hold() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : r.constraints) {
            cs.push_back(Json{{"name", c.name}, {"required", c.required}, {"holds", c.holds}, {"detail", c.detail}});
            t << "  " << (c.holds ? "ok  " : "FAIL") << " " << c.name << (c.required ? "" : " (advisory)") << ": "
              << c.detail << "\n";
            csv << r.level << "," << detail::csv_escape(c.name) << "," << (c.required ? "true" : "false") << ","
                << (c.holds ? "true" : "false") << "," << detail::csv_escape(c.detail) << "\n";
        }
        levels.push_back(Json{{"level", r.level}, {"passes", r.all_required_hold()}, {"constraints", cs}});
        all = all && r.all_required_hold();
    }
    t << "tower: " << (all ? "all required constraints hold" : "required constraint failure") << "\n";
    out.doc = Json{{"command", "verify-tower"}, {"spec", spec_json(spec)}, {"passes", all}, {"levels", levels}};
    out.text = t.str();
    out.csv = csv.str();
    out.exit_code = all ? 0 : 1;
    return out;
}

/// Default probes gamma - 1/10, gamma, gamma + 1/10.
inline std::vector<Rational> default_deltas(const WeightCase& w) {
    return {w.gamma - Rational(1, 10), w.gamma, w.gamma + Rational(1, 10)};
}

/// northcott --spec file [--delta d]...
inline Report cmd_northcott(const TowerSpec& spec, const std::vector<Rational>& deltas, const RunConfig& cfg) {
    Report out;
    Json reports = Json::array();
    std::ostringstream t, csv;
    bool ordered = true;
    int digits = cfg.digits();
    for (const auto& delta : deltas) {
        auto r = northcott_sandwich(spec, delta, cfg.precision);
        Json levels = Json::array();
        for (std::size_t i = 0; i < r.levels.size(); ++i) {
            const auto& l = r.levels[i];
            levels.push_back(Json{{"level", i + 1},
                                  {"d", l.level.d.get_str()},
                                  {"p", l.level.p.get_str()},
                                  {"q", l.level.q.get_str()},
                                  {"lower", detail::enclosure_json(l.lower, digits)},
                                  {"upper", detail::enclosure_json(l.upper, digits)},
                                  {"lower_le_upper", l.lower_below_upper}});
            ordered = ordered && l.lower_below_upper;
        }
        reports.push_back(Json{{"delta", to_string(delta)},
                               {"levels", levels},
                               {"tail_from_level", r.tail_begin + 1},
                               {"estimate", detail::enclosure_json(r.estimate, digits)},
                               {"verdict", r.verdict_string()},
                               {"consistent", r.consistent},
                               {"evidence", r.evidence}});
        std::string table = to_csv(r, digits);
        if (deltas.size() > 1) {
            csv << "# delta=" << to_string(delta) << " verdict=" << r.verdict_string()
                << " consistent=" << (r.consistent ? "true" : "false") << "\n";
        }
        csv << table;
        t << "delta: " << to_string(delta) << "\n" << table;
        t << "sandwich (levels " << r.tail_begin + 1 << ".." << r.levels.size()
          << "): " << detail::enclosure_text(r.estimate, 17) << "\n";
        t << "verdict: " << r.verdict_string() << " (" << (r.consistent ? "consistent" : "inconsistent")
          << " with the finite trend)\n";
        for (const auto& e : r.evidence) {
            t << "  " << e << "\n";
        }
        t << "\n";
    }
    out.doc = Json{{"command", "northcott"}, {"spec", spec_json(spec)}, {"reports", reports}};
    out.text = t.str();
    out.csv = csv.str();
    out.exit_code = ordered ? 0 : 1;
    return out;
}

/// "log(N)" with N an integer or a^b, or a plain rational/decimal.
inline CertifiedReal parse_log_norm(const std::string& text, mpfr_prec_t precision) {
    auto s = radnor::detail::trim(text);
    if (s.substr(0, 4) == "log(" && s.back() == ')') {
        auto inner = radnor::detail::trim(s.substr(4, s.size() - 5));
        BigInt n;
        if (auto caret = inner.find('^'); caret != std::string_view::npos) {
            BigInt e = parse_bigint(inner.substr(caret + 1));
            if (e < 0 || !e.fits_ulong_p()) {
                throw ParseError("bad exponent in '" + text + "'");
            }
            n = pow(parse_bigint(inner.substr(0, caret)), e.get_ui());
        } else {
            n = parse_bigint(inner);
        }
        if (n < 1) {
            throw InvalidArgument("norm must be a positive integer: '" + text + "'");
        }
        return log_interval(n, precision + 16);
    }
    return CertifiedReal::from_rational(parse_rational(s), precision + 16);
}

/// silverman --log-norm-disc X --d d --deg-k k
inline Report cmd_silverman(const std::string& log_norm, const BigInt& d, const BigInt& deg_k, const RunConfig& cfg) {
    auto x = parse_log_norm(log_norm, cfg.precision);
    auto b = silverman_bound(x, d, deg_k, cfg.precision);
    Report out;
    out.doc = Json{{"command", "silverman"},
                   {"log_norm_disc", detail::enclosure_json(x, cfg.digits())},
                   {"d", d.get_str()},
                   {"deg_k", deg_k.get_str()},
                   {"bound", detail::enclosure_json(b, cfg.digits())},
                   {"vacuous", !b.certainly_positive()}};
    out.text = "silverman bound: " + detail::enclosure_text(b, cfg.digits()) + (b.certainly_positive() ? "" : " (vacuous)") + "\n";
    return out;
}

/// corollary-bound --p p --d d
inline Report cmd_corollary(const BigInt& p, const BigInt& d, const RunConfig& cfg) {
    auto b = corollary_lower_bound(p, d, cfg.precision);
    Report out;
    out.doc = Json{{"command", "corollary-bound"},
                   {"p", p.get_str()},
                   {"d", d.get_str()},
                   {"bound", detail::enclosure_json(b, cfg.digits())}};
    out.text = "log(p)/d - log(d)/(2(d-1)): " + detail::enclosure_text(b, cfg.digits()) + "\n";
    return out;
}

/// verify-divisibility --p p --q q --d d
inline Report cmd_verify_divisibility(const BigInt& p, const BigInt& q, const BigInt& d) {
    auto r = verify_divisibility(p, q, d);
    Report out;
    std::string factored = (r.discriminant < 0 ? "-" : "") + p.get_str() + "^" + std::to_string(r.p_valuation) + " * " +
                           q.get_str() + "^" + std::to_string(r.q_valuation) +
                           (r.cofactor == 1 ? "" : " * " + r.cofactor.get_str());
    out.doc = Json{{"command", "verify-divisibility"},
                   {"polynomial", format_coefficients(r.polynomial)},
                   {"discriminant", r.discriminant.get_str()},
                   {"factored", factored},
                   {"p_valuation", r.p_valuation},
                   {"q_valuation", r.q_valuation},
                   {"required_valuation", BigInt(d - 1).get_str()},
                   {"p_divides", r.p_divides},
                   {"q_divides", r.q_divides},
                   {"p_eisenstein", r.p_eisenstein},
                   {"q_eisenstein_alternative", r.q_eisenstein},
                   {"holds", r.holds()}};
    std::ostringstream t;
    t << "polynomial: " << to_string(r.polynomial) << "\n"
      << "discriminant: " << r.discriminant << " = " << factored << "\n"
      << "p^(d-1) | disc: " << (r.p_divides ? "yes" : "no") << "\n"
      << "q^(d-1) | disc: " << (r.q_divides ? "yes" : "no") << "\n"
      << "p-Eisenstein " << to_string(r.polynomial) << ": " << (r.p_eisenstein ? "yes" : "no") << "\n"
      << "q-Eisenstein " << to_string(r.alternative) << ": " << (r.q_eisenstein ? "yes" : "no") << "\n"
      << "holds: " << (r.holds() ? "true" : "false") << "\n";
    out.text = t.str();
    out.exit_code = r.holds() ? 0 : 1;
    return out;
}

/// classify --case X [--gamma g] [--c c]
inline Report cmd_classify(const WeightCase& w) {
    auto c = classify_intervals(w);
    Report out;
    std::string nor_label = "Nor_" + to_string(c.gamma);
    out.doc = Json{{"command", "classify"},
                   {"case", to_string(w.tag)},
                   {"gamma", to_string(c.gamma)},
                   {"conclusion", c.conclusion},
                   {"I_B", c.bogomolov.to_string()},
                   {"I_N", c.northcott.to_string()},
                   {"nor", c.nor.to_string()},
                   {"base_I_N", c.base_northcott.to_string()}};
    out.text = "I_B=" + c.bogomolov.to_string() + ", I_N=" + c.northcott.to_string() + ", " + nor_label + "=" +
               c.nor.to_string() + "\nbase field I_N(K)=" + c.base_northcott.to_string() + " (assumed)\n";
    return out;
}

/// oracle-height --expr "<expr>"
inline Report cmd_oracle_height(const std::string& expr, const RunConfig& cfg) {
    auto e = parse_expr(expr);
    auto m = minimal_poly(e, cfg.ladder(), cfg.conjugate_cap);
    auto h = oracle_height(e, cfg.precision, cfg.ladder(), cfg.conjugate_cap);
    Report out;
    out.doc = Json{{"command", "oracle-height"},
                   {"expr", e.to_string()},
                   {"minimal_polynomial", format_coefficients(m)},
                   {"degree", m.degree()},
                   {"height", detail::enclosure_json(h, cfg.digits())}};
    out.text = "expression: " + e.to_string() + "\nminimal polynomial: " + to_string(m) +
               "\nheight: " + detail::enclosure_text(h, cfg.digits()) + "\n";
    return out;
}

/// cross-check --p p --q q --d d [--samples n]
inline Report cmd_cross_check(const BigInt& p, const BigInt& q, const BigInt& d, std::size_t samples, const RunConfig& cfg) {
    if (!d.fits_ulong_p() || d < 2) {
        throw InvalidArgument("cross-check needs d >= 2");
    }
    if (!(p < q)) {
        throw InvalidArgument("cross-check needs p < q");
    }
    auto exprs = corollary_samples(p, q, d.get_ui(), samples);
    auto r = cross_check_corollary(p, q, d, exprs, cfg.precision, cfg.ladder(), cfg.conjugate_cap);
    Report out;
    Json rows = Json::array();
    std::ostringstream t, csv;
    csv << "expr,height_lo,height_hi,holds\n";
    t << "bound log(p)/d - log(d)/(2(d-1)): " << detail::enclosure_text(r.bound, 17) << "\n";
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"expr", row.expr.to_string()},
                            {"height", detail::enclosure_json(row.height, cfg.digits())},
                            {"holds", row.holds}});
        t << (row.holds ? "ok   " : "FAIL ") << row.expr.to_string() << "  h = " << detail::enclosure_text(row.height, 17) << "\n";
        csv << detail::csv_escape(row.expr.to_string()) << "," << row.height.lo().to_string(cfg.digits(), MPFR_RNDD) << ","
            << row.height.hi().to_string(cfg.digits(), MPFR_RNDU) << "," << (row.holds ? "true" : "false") << "\n";
    }
    t << "samples: " << r.rows.size() << ", all above the bound: " << (r.all_hold() ? "yes" : "no") << "\n";
    out.doc = Json{{"command", "cross-check"},
                   {"p", p.get_str()},
                   {"q", q.get_str()},
                   {"d", d.get_str()},
                   {"bound", detail::enclosure_json(r.bound, cfg.digits())},
                   {"all_hold", r.all_hold()},
                   {"samples", rows}};
    out.text = t.str();
    out.csv = csv.str();
    out.exit_code = r.all_hold() ? 0 : 1;
    return out;
}

/// demo-negative --gamma g --n N [--b radical]
inline Report cmd_demo_negative(const Rational& gamma, unsigned long n, const std::optional<std::string>& b_text,
                                const RunConfig& cfg) {
    RadicalRational b = b_text ? parse_radical(*b_text) : default_demo_b();
    auto t = demo_nonpositive(gamma, n, b, cfg.precision);
    Report out;
    Json rows = Json::array();
    std::ostringstream text, csv;
    int digits = cfg.digits();
    csv << "n,h_gamma_a_lo,h_gamma_a_hi,h_gamma_ba_lo,h_gamma_ba_hi,chain_lo,chain_hi,chain_holds\n";
    text << "gamma: " << to_string(gamma) << ", b = " << b << ", a_n = 2^(1/3^n)\n";
    text << "n  h_gamma(a_n) = log2*3^e  h_gamma(a_n)  h_gamma(b a_n)  chain bound  holds\n";
    for (const auto& r : t.rows) {
        rows.push_back(Json{{"n", r.n},
                            {"a", r.a.to_string()},
                            {"h_gamma_a_symbolic", "log(2)*3^(" + to_string(r.a_exponent) + ")"},
                            {"h_gamma_a", detail::enclosure_json(r.h_gamma_a, digits)},
                            {"product", r.product.to_string()},
                            {"h_gamma_product", detail::enclosure_json(r.h_gamma_product, digits)},
                            {"chain_bound", detail::enclosure_json(r.chain_bound, digits)},
                            {"chain_holds", r.chain_holds},
                            {"decreasing", r.decreasing}});
        text << r.n << "  log(2)*3^(" << to_string(r.a_exponent) << ")  " << r.h_gamma_a.to_string(10) << "  "
             << r.h_gamma_product.to_string(10) << "  " << r.chain_bound.to_string(10) << "  "
             << (r.chain_holds ? "yes" : "NO") << "\n";
        csv << r.n << "," << r.h_gamma_a.lo().to_string(digits, MPFR_RNDD) << "," << r.h_gamma_a.hi().to_string(digits, MPFR_RNDU)
            << "," << r.h_gamma_product.lo().to_string(digits, MPFR_RNDD) << ","
            << r.h_gamma_product.hi().to_string(digits, MPFR_RNDU) << "," << r.chain_bound.lo().to_string(digits, MPFR_RNDD)
            << "," << r.chain_bound.hi().to_string(digits, MPFR_RNDU) << "," << (r.chain_holds ? "true" : "false") << "\n";
    }
    bool ok = t.all_chain_hold() && t.strictly_decreasing();
    text << "chain holds for every n: " << (t.all_chain_hold() ? "yes" : "no")
         << "; h_gamma(a_n) strictly decreasing: " << (t.strictly_decreasing() ? "yes" : "no") << "\n";
    out.doc = Json{{"command", "demo-negative"},
                   {"gamma", to_string(gamma)},
                   {"b", b.to_string()},
                   {"rows", rows},
                   {"chain_holds", t.all_chain_hold()},
                   {"strictly_decreasing", t.strictly_decreasing()}};
    out.text = text.str();
    out.csv = csv.str();
    out.exit_code = ok ? 0 : 1;
    return out;
}

} // namespace radnor::cli
