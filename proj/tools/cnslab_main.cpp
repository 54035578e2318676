// cnslab - canonical number systems over imaginary quadratic rings.
//
// Subcommands: validate, expand, evaluate, stats, multdep, sweep, bound,
// lab, scan. Exit codes: 0 success, 1 usage error, 2 domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnslab/bounds.hpp"
#include "cnslab/cns.hpp"
#include "cnslab/digitstat.hpp"
#include "cnslab/multdep.hpp"
#include "cnslab/theorem_lab.hpp"

namespace {

using nlohmann::json;

cnslab::QuadInt parse_element(const std::string& text, std::optional<std::int64_t> d_flag) {
    cnslab::QuadInt x = cnslab::parse_quadint(text);
    if (d_flag && *d_flag != x.field().d)
        cnslab::fail(cnslab::Errc::parse_error,
                     "--d disagrees with the field index in \"" + text + "\"");
    return x;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) cnslab::fail(cnslab::Errc::domain_error, "cannot open " + out_path);
    os << text;
}

struct Options {
    std::optional<std::int64_t> d;
    std::string alpha, beta, gamma, digits_in, out;
    std::int64_t n_max = 1000;
    std::int64_t a_max = 10;
    std::int64_t kp_n_max = 10000;
    double x = 0.0, C = 0.0, c1 = 2.0;
    std::string format;
    bool scan_katai = false, scan_lebesgue = false, scan_qi = false;
    bool lab_case_split = false, lab_empirical_c = false;
};

int run(CLI::App& app, Options& opt) {
    if (auto* cmd = app.get_subcommand("validate"); cmd->parsed()) {
        const auto alpha = parse_element(opt.alpha, opt.d);
        const auto check = cnslab::is_cns(alpha);
        if (opt.format == "json") {
            json j{{"alpha", cnslab::to_string(alpha)},
                   {"criterion_ok", check.criterion_ok},
                   {"ring_match", check.ring_match}};
            if (!alpha.is_rational()) {
                const auto [E, F] = cnslab::minimal_poly(alpha);
                j["E"] = E.str();
                j["F"] = F.str();
            }
            emit(j.dump(), opt.out);
        } else {
            std::ostringstream os;
            os << "alpha = " << alpha << "\ncriterion_ok = " << (check.criterion_ok ? "true" : "false")
               << "\nring_match = " << (check.ring_match ? "true" : "false") << "\n";
            emit(os.str(), opt.out);
        }
        return 0;
    }

    if (auto* cmd = app.get_subcommand("expand"); cmd->parsed()) {
        const auto base = cnslab::make_base(parse_element(opt.alpha, opt.d));
        const auto gamma = parse_element(opt.gamma, opt.d);
        const auto ds = cnslab::expand(gamma, base);
        if (opt.format == "text")
            emit(cnslab::digitstring_display(ds), opt.out);
        else
            emit(cnslab::digitstring_to_json(ds), opt.out);
        return 0;
    }

    if (auto* cmd = app.get_subcommand("evaluate"); cmd->parsed()) {
        std::string text = opt.digits_in;
        if (text.empty()) {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else if (!text.empty() && text[0] != '{') {
            std::ifstream is(text, std::ios::binary);
            if (!is) cnslab::fail(cnslab::Errc::domain_error, "cannot open " + text);
            std::ostringstream buf;
            buf << is.rdbuf();
            text = buf.str();
        }
        const auto ds = cnslab::digitstring_from_json(text);
        emit(cnslab::to_string(cnslab::evaluate(ds)), opt.out);
        return 0;
    }

    if (auto* cmd = app.get_subcommand("stats"); cmd->parsed()) {
        const auto base = cnslab::make_base(parse_element(opt.alpha, opt.d));
        const auto gamma = parse_element(opt.gamma, opt.d);
        const auto st = cnslab::stats(gamma, base);
        if (opt.format == "text") {
            std::ostringstream os;
            os << "Z = " << st.Z << "\nS = " << st.S << "\nL = " << st.L
               << "\ndefect = " << st.defect << "\n";
            emit(os.str(), opt.out);
        } else {
            emit(json{{"Z", st.Z}, {"S", st.S}, {"L", st.L}, {"defect", st.defect}}.dump(),
                 opt.out);
        }
        return 0;
    }

    if (auto* cmd = app.get_subcommand("multdep"); cmd->parsed()) {
        const auto alpha = parse_element(opt.alpha, opt.d);
        const auto beta = parse_element(opt.beta, opt.d);
        const auto verdict = cnslab::mult_dep(alpha, beta);
        json j{{"dependent", verdict.dependent}};
        if (verdict.uv) {
            j["u"] = verdict.uv->first;
            j["v"] = verdict.uv->second;
        }
        if (verdict.w) j["w"] = *verdict.w;
        if (opt.format == "text") {
            std::ostringstream os;
            os << (verdict.dependent ? "dependent" : "independent");
            if (verdict.uv) os << " u=" << verdict.uv->first << " v=" << verdict.uv->second;
            if (verdict.w) os << " w=" << *verdict.w;
            os << "\n";
            emit(os.str(), opt.out);
        } else {
            emit(j.dump(), opt.out);
        }
        return 0;
    }

    if (auto* cmd = app.get_subcommand("sweep"); cmd->parsed()) {
        const auto alpha = parse_element(opt.alpha, opt.d);
        const auto beta = parse_element(opt.beta, opt.d);
        const auto baseA = cnslab::make_base(alpha);
        const auto baseB = cnslab::make_base(beta);
        const auto records = cnslab::sweep(alpha.field(), baseA, baseB, opt.n_max);
        std::ostringstream os;
        cnslab::write_sweep_csv(os, records);
        emit(os.str(), opt.out);
        return 0;
    }

    if (auto* cmd = app.get_subcommand("bound"); cmd->parsed()) {
        std::ostringstream os;
        os.precision(17);
        os << cnslab::theorem_bound(opt.x, opt.C) << "\n";
        emit(os.str(), opt.out);
        return 0;
    }

    if (auto* cmd = app.get_subcommand("lab"); cmd->parsed()) {
        const auto alpha = parse_element(opt.alpha, opt.d);
        const auto beta = parse_element(opt.beta, opt.d);
        const auto baseA = cnslab::make_base(alpha);
        const auto baseB = cnslab::make_base(beta);
        if (opt.lab_case_split) {
            const auto gamma = parse_element(opt.gamma, opt.d);
            const auto env = cnslab::kp_empirical_constants(baseA, opt.kp_n_max);
            const cnslab::KpConstants kpA{env.e1_hat, env.e2_hat};
            const auto report = cnslab::case_split(gamma, baseA, baseB, opt.c1, kpA);
            json j{{"theta", report.theta},
                   {"k", report.k},
                   {"case", report.kind == cnslab::CaseKind::GapFound ? "GapFound"
                                                                      : "AllIntervalsHit"}};
            if (report.kind == cnslab::CaseKind::GapFound) {
                j["s"] = report.s;
                j["p"] = report.p;
                j["q"] = report.q;
            }
            emit(j.dump(), opt.out);
            return 0;
        }
        if (opt.lab_empirical_c) {
            const auto records = cnslab::sweep(alpha.field(), baseA, baseB, opt.n_max);
            const auto report = cnslab::empirical_C(records);
            emit(cnslab::empirical_c_json(report, records, alpha.field(), opt.n_max), opt.out);
            return 0;
        }
        throw CLI::ValidationError("lab", "pick one of --case-split / --empirical-c");
    }

    if (auto* cmd = app.get_subcommand("scan"); cmd->parsed()) {
        if (opt.scan_katai) {
            const auto bases = cnslab::katai_szabo_scan(opt.a_max);
            json j = json::array();
            for (const auto& b : bases) j.push_back(cnslab::to_string(b.alpha()));
            emit(j.dump(), opt.out);
            return 0;
        }
        if (opt.scan_lebesgue) {
            const auto hits = cnslab::lebesgue_scan(opt.a_max);
            json j = json::array();
            for (const auto& h : hits) j.push_back({{"a", h.a}, {"x", h.x}, {"v", h.v}});
            emit(j.dump(), opt.out);
            return 0;
        }
        if (opt.scan_qi) {
            const auto pairs = cnslab::qi_scan(opt.a_max);
            json j = json::array();
            for (const auto& pr : pairs)
                j.push_back({cnslab::to_string(pr.first), cnslab::to_string(pr.second)});
            emit(j.dump(), opt.out);
            return 0;
        }
        throw CLI::ValidationError("scan", "pick one of --katai-szabo / --lebesgue / --qi");
    }

    std::cerr << app.help();
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical number systems over imaginary quadratic integer rings"};
    app.require_subcommand(0, 1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--d", opt.d, "field index d of Q(sqrt(-d))");
        cmd->add_option("--format", opt.format, "output format: text|json|csv");
        cmd->add_option("--out", opt.out, "write output to this path instead of stdout");
    };

    auto* validate = app.add_subcommand("validate", "base criterion and ring-match check");
    add_common(validate);
    validate->add_option("--alpha", opt.alpha, "base element \"a+b*w[d]\"")->required();

    auto* expand = app.add_subcommand("expand", "alpha-adic expansion of gamma");
    add_common(expand);
    expand->add_option("--alpha", opt.alpha)->required();
    expand->add_option("--gamma", opt.gamma)->required();

    auto* evaluate = app.add_subcommand("evaluate", "evaluate a DigitString JSON back to gamma");
    add_common(evaluate);
    evaluate->add_option("--in", opt.digits_in, "DigitString JSON (inline, file path, or stdin)");

    auto* stats = app.add_subcommand("stats", "digit statistics Z, S, L, defect");
    add_common(stats);
    stats->add_option("--alpha", opt.alpha)->required();
    stats->add_option("--gamma", opt.gamma)->required();

    auto* multdep = app.add_subcommand("multdep", "multiplicative dependence verdict");
    add_common(multdep);
    multdep->add_option("--alpha", opt.alpha)->required();
    multdep->add_option("--beta", opt.beta)->required();

    auto* sweep = app.add_subcommand("sweep", "two-base digit-statistics sweep (CSV)");
    add_common(sweep);
    sweep->add_option("--alpha", opt.alpha)->required();
    sweep->add_option("--beta", opt.beta)->required();
    sweep->add_option("--n-max", opt.n_max, "sweep all gamma with norm <= n_max")->required();

    auto* bound = app.add_subcommand("bound", "theorem lower-bound value");
    add_common(bound);
    bound->add_option("--x", opt.x, "value of |gamma|")->required();
    bound->add_option("--C", opt.C, "constant C")->required();

    auto* lab = app.add_subcommand("lab", "proof-gadget computations");
    add_common(lab);
    lab->add_option("--alpha", opt.alpha)->required();
    lab->add_option("--beta", opt.beta)->required();
    lab->add_option("--gamma", opt.gamma);
    lab->add_option("--c1", opt.c1, "interval growth constant (> 1)");
    lab->add_option("--n-max", opt.n_max);
    lab->add_option("--kp-n-max", opt.kp_n_max, "sweep size for the empirical e1, e2");
    lab->add_flag("--case-split", opt.lab_case_split);
    lab->add_flag("--empirical-c", opt.lab_empirical_c);

    auto* scan = app.add_subcommand("scan", "base and perfect-power scans");
    add_common(scan);
    scan->add_option("--a-max", opt.a_max)->required();
    scan->add_flag("--katai-szabo", opt.scan_katai);
    scan->add_flag("--lebesgue", opt.scan_lebesgue);
    scan->add_flag("--qi", opt.scan_qi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return run(app, opt);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const cnslab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
