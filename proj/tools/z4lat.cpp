#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "z4lat/errors.hpp"
#include "z4lat/io.hpp"
#include "z4lat/lattice.hpp"
#include "z4lat/paperdata.hpp"
#include "z4lat/qseries.hpp"
#include "z4lat/verify.hpp"
#include "z4lat/weights.hpp"

namespace {

using namespace z4lat;

std::ostream* json_stream(const std::string& path, std::ofstream& file) {
    if (path.empty()) return nullptr;
    if (path == "-") return &std::cout;
    file.open(path);
    if (!file) throw Error("cannot open " + path);
    return &file;
}

int cmd_verify(const std::string& scope_str, int jobs, const std::string& json_path) {
    const auto scope = scope_from_string(scope_str);
    if (!scope) {
        std::cerr << "unknown scope: " << scope_str
                  << " (expected table1|table2|table3|swe26|theta41|frames|all)\n";
        return 2;
    }
    VerifyOptions opt;
    opt.jobs = jobs;
    const VerificationReport report = verify(*scope, opt);
    print_text(std::cout, report);
    if (!json_path.empty()) {
        std::ofstream file;
        std::ostream* out = json_stream(json_path, file);
        if (out) write_jsonl(*out, report);
    }
    return report.all_ok() ? 0 : 1;
}

nlohmann::json weights_json(const Z4Code& code, const MinWeights& mw) {
    nlohmann::json j;
    j["n"] = code.length();
    j["dE"] = mw.min.euclidean;
    j["dL"] = mw.min.lee;
    j["dH"] = mw.min.hamming;
    j["codewords_at_dE"] = mw.euclid_count.str();
    return j;
}

void emit_json(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) return;
    std::ofstream file;
    std::ostream* out = json_stream(path, file);
    if (out) *out << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact self-dual Z4-code and Construction A lattice toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for enumeration-scale checks");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run golden checks against the embedded tables");
    std::string scope = "all", verify_json;
    verify_cmd->add_option("scope", scope, "table1|table2|table3|swe26|theta41|frames|all");
    verify_cmd->add_option("--json", verify_json, "write line-delimited JSON records to a file ('-' for stdout)");

    // list
    auto* list_cmd = app.add_subcommand("list", "list builtin codes");

    // compute
    auto* compute = app.add_subcommand("compute", "compute one artifact");
    compute->require_subcommand(1);
    std::string code_arg, json_path;
    int cap = -1, max_norm = 4, coord = 1, bound_n = 0, frame_k = 4;

    auto add_code_arg = [&](CLI::App* sub) {
        sub->add_option("code", code_arg, "builtin name (C26..C45) or a code file path")->required();
        sub->add_option("--json", json_path, "machine-readable output file ('-' for stdout)");
    };
    auto* w_cmd = compute->add_subcommand("weights", "minimum Euclidean/Lee/Hamming weights");
    add_code_arg(w_cmd);
    auto* swe_cmd = compute->add_subcommand("swe", "symmetrized weight enumerator");
    add_code_arg(swe_cmd);
    swe_cmd->add_option("--cap", cap, "Euclidean-weight truncation (full enumeration if absent)");
    auto* lat_cmd = compute->add_subcommand("lattice", "Construction A report");
    add_code_arg(lat_cmd);
    lat_cmd->add_option("--max-norm", max_norm, "theta series prefix bound");
    bool direct_enum = false;
    lat_cmd->add_flag("--enum", direct_enum,
                      "cross-check the theta prefix by exact short-vector enumeration");
    auto* dec_cmd = compute->add_subcommand("theta-decompose", "theta decomposition coefficients");
    add_code_arg(dec_cmd);
    auto* sh_cmd = compute->add_subcommand("shadow", "shadow series and its constraints");
    add_code_arg(sh_cmd);
    auto* sub_cmd = compute->add_subcommand("sub", "shortened self-dual code");
    add_code_arg(sub_cmd);
    sub_cmd->add_option("--coord", coord, "1-based coordinate (default 1)");
    auto* dual_cmd = compute->add_subcommand("dual", "dual code generator matrix");
    add_code_arg(dual_cmd);
    auto* bounds_cmd = compute->add_subcommand("bounds", "minimum-weight bounds for a length");
    bounds_cmd->add_option("--n", bound_n, "code length")->required();
    bounds_cmd->add_option("--json", json_path, "machine-readable output file");
    auto* frame_cmd = compute->add_subcommand("frame", "search a k-frame in A4(code)");
    add_code_arg(frame_cmd);
    frame_cmd->add_option("--k", frame_k, "frame norm (default 4)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify_cmd) return cmd_verify(scope, jobs, verify_json);
        if (*list_cmd) {
            for (const auto& g : paperdata::code_grids()) {
                const Z4Code& c = paperdata::builtin_code(g.name);
                std::cout << g.name << "  n=" << g.n << " k1=" << g.k1
                          << " k2=" << c.standard_form().k2 << "  type "
                          << (c.type() == CodeType::TypeII ? "II" : "I") << '\n';
            }
            return 0;
        }
        if (*w_cmd) {
            const Z4Code code = load_code(code_arg);
            const MinWeights mw = min_weights(code, jobs);
            std::cout << mw.min.euclidean << "/" << mw.min.lee << "/" << mw.min.hamming << '\n';
            std::cout << "codewords at d_E: " << mw.euclid_count.str() << '\n';
            emit_json(json_path, weights_json(code, mw));
            return 0;
        }
        if (*swe_cmd) {
            const Z4Code code = load_code(code_arg);
            const SWE s = swe(code, cap >= 0 ? std::optional<int>(cap) : std::nullopt, jobs);
            write_swe_lines(std::cout, s);
            std::cout << swe_polynomial(s) << '\n';
            if (!json_path.empty()) {
                nlohmann::json j;
                j["n"] = s.n;
                if (s.truncation) j["truncation"] = *s.truncation;
                auto& terms = j["terms"] = nlohmann::json::array();
                for (const auto& [key, v] : s.terms)
                    terms.push_back({key[0], key[1], key[2], v.str()});
                emit_json(json_path, j);
            }
            return 0;
        }
        if (*lat_cmd) {
            const Z4Code code = load_code(code_arg);
            const LatticeBasis basis = construction_a(code, code_arg);
            const Parity parity = verify_unimodular(basis);
            const Kissing kiss = min_norm_and_kissing(code, jobs);
            const QuarterSeries theta = theta_prefix(code, max_norm, jobs);
            std::cout << "dimension " << basis.n << ", "
                      << (parity == Parity::Odd ? "odd" : "even") << " unimodular\n";
            std::cout << "minimum norm " << kiss.min_norm << ", kissing " << kiss.count.str()
                      << '\n';
            std::cout << "theta: " << series_polynomial(theta) << " + ...\n";
            if (direct_enum) {
                const ShortVectorSet sv = enumerate_short_vectors(basis, max_norm);
                bool agree = true;
                for (int m = 1; m <= max_norm; ++m) {
                    const auto it = sv.count_by_norm.find(m);
                    const Int direct = it == sv.count_by_norm.end() ? Int(0) : it->second;
                    std::cout << "enum N" << m << " = " << direct.str();
                    if (direct != Int(theta.coeff_int(m))) {
                        std::cout << "  (theta says " << theta.coeff_int(m).str() << ")";
                        agree = false;
                    }
                    std::cout << '\n';
                }
                std::cout << (agree ? "enumeration agrees with the theta prefix\n"
                                    : "ENUMERATION DISAGREES\n");
                if (!agree) return 1;
            }
            if (!json_path.empty()) {
                nlohmann::json j;
                j["n"] = basis.n;
                j["parity"] = parity == Parity::Odd ? "odd" : "even";
                j["min_norm"] = kiss.min_norm;
                j["kissing"] = kiss.count.str();
                for (const auto& [k, v] : theta.coeffs())
                    j["theta"][exponent_label(k)] = v.str();
                emit_json(json_path, j);
            }
            return 0;
        }
        if (*dec_cmd) {
            const Z4Code code = load_code(code_arg);
            const int terms_needed = code.length() / 8;
            const QuarterSeries theta = theta_prefix(code, terms_needed + 1, jobs);
            const ThetaDecomposition dec = decompose(theta, code.length());
            for (size_t j = 0; j < dec.a.size(); ++j)
                std::cout << "a" << j << " = " << dec.a[j].str() << '\n';
            if (!json_path.empty()) {
                nlohmann::json j;
                j["n"] = dec.n;
                for (const auto& a : dec.a) j["a"].push_back(a.str());
                emit_json(json_path, j);
            }
            return 0;
        }
        if (*sh_cmd) {
            const Z4Code code = load_code(code_arg);
            const int terms_needed = code.length() / 8;
            const QuarterSeries theta = theta_prefix(code, terms_needed + 1, jobs);
            const ThetaDecomposition dec = decompose(theta, code.length());
            const QuarterSeries s = shadow(dec);
            const Kissing kiss = min_norm_and_kissing(code, jobs);
            const auto rep = shadow_constraints(s, kiss.min_norm);
            write_series_lines(std::cout, s);
            std::cout << "shadow: " << series_polynomial(s) << " + ...\n";
            std::cout << "constraints (mu=" << kiss.min_norm << "): "
                      << (rep.all_pass() ? "all pass" : "VIOLATED") << '\n';
            for (const auto& w : rep.witnesses) std::cout << "  " << w << '\n';
            return rep.all_pass() ? 0 : 1;
        }
        if (*sub_cmd) {
            const Z4Code code = load_code(code_arg);
            const Z4Code sub = code.shorten_sub(coord - 1);
            write_code(std::cout, sub);
            const MinWeights mw = min_weights(sub, jobs);
            std::cout << "d_E/d_L/d_H = " << mw.min.euclidean << "/" << mw.min.lee << "/"
                      << mw.min.hamming << '\n';
            return 0;
        }
        if (*dual_cmd) {
            const Z4Code code = load_code(code_arg);
            const Z4Code d = code.dual();
            write_code(std::cout, d);
            std::cout << (code.same_span(d) ? "self-dual" : "not self-dual") << '\n';
            return 0;
        }
        if (*bounds_cmd) {
            std::cout << improved_upper_bound(bound_n) << '\n';
            std::cout << "type I bound: " << typeI_upper_bound(bound_n) << '\n';
            try {
                const DmaxEntry e = dmaxE_table(bound_n);
                std::cout << "largest known exact: "
                          << (e.exact() ? std::to_string(e.lo)
                                        : std::to_string(e.lo) + " or " + std::to_string(e.hi))
                          << '\n';
            } catch (const OutOfRange&) {
            }
            if (!json_path.empty()) {
                nlohmann::json j;
                j["n"] = bound_n;
                j["improved_bound"] = improved_upper_bound(bound_n);
                j["typeI_bound"] = typeI_upper_bound(bound_n);
                emit_json(json_path, j);
            }
            return 0;
        }
        if (*frame_cmd) {
            const Z4Code code = load_code(code_arg);
            const LatticeBasis basis = construction_a(code, code_arg);
            const FrameResult res = find_k_frame(basis, frame_k);
            switch (res.status) {
                case FrameResult::Status::Found:
                    std::cout << frame_k << "-frame found (" << res.nodes << " nodes)\n";
                    for (const auto& v : res.frame) {
                        for (size_t t = 0; t < v.size(); ++t) std::cout << (t ? " " : "") << v[t];
                        std::cout << '\n';
                    }
                    return 0;
                case FrameResult::Status::None:
                    std::cout << "none (" << res.nodes << " nodes)\n";
                    return 0;
                case FrameResult::Status::BudgetExhausted:
                    std::cout << "budget_exhausted (" << res.nodes << " nodes)\n";
                    return 3;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
