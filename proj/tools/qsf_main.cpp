// Command-line front end: evaluate any implemented function, run any
// identity-verification suite over a seeded random grid, or sweep a suite
// across several bases. Exit codes: 0 pass, 1 suite fail, 2 domain error,
// 3 convergence error, 4 usage error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsf/qsf.hpp"

namespace {

// Accepts "1.5", "-2e-3", "1+2i", "0.5-0.25i", "2i", "i", "-i"; 'j' works too.
qsf::cx parse_complex(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw qsf::domain_error("empty complex literal");
    char tail = s.back();
    if (tail != 'i' && tail != 'j') {
        size_t pos = 0;
        double re = std::stod(s, &pos);
        if (pos != s.size()) throw qsf::domain_error("bad complex literal: " + s);
        return {re, 0.0};
    }
    s.pop_back();
    // split at the last +/- that is not an exponent sign and not leading
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto parse_part = [](const std::string& part) -> double {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        size_t pos = 0;
        double v = std::stod(part, &pos);
        if (pos != part.size()) throw qsf::domain_error("bad complex literal");
        return v;
    };
    if (split == std::string::npos) return {0.0, parse_part(s)};
    return {parse_part(s.substr(0, split)), parse_part(s.substr(split))};
}

std::string json_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct cli_options {
    std::string q = "0.5";
    std::string x = "1";
    std::string nu = "0";
    int trunc = 4096;
    double tol = 1e-15;
    std::uint64_t seed = 7;
    int points = 100;
    std::string format = "json";
    double radius = 0.0;
    int nodes = 512;
};

qsf::run_config make_config(const cli_options& opt) {
    qsf::run_config cfg;
    qsf::cx qv = parse_complex(opt.q);
    if (!(std::abs(qv) > 0.0) || !(std::abs(qv) < 1.0))
        throw qsf::domain_error("q out of range: need 0 < |q| < 1");
    cfg.q = qsf::q_base(qv);
    cfg.params = qsf::series_params(opt.trunc, opt.tol);
    cfg.seed = opt.seed;
    cfg.points = opt.points;
    if (opt.format == "json")
        cfg.format = qsf::report_format::json;
    else if (opt.format == "csv")
        cfg.format = qsf::report_format::csv;
    else
        throw qsf::shape_error("unknown format: " + opt.format);
    cfg.radius = opt.radius;
    cfg.nodes = opt.nodes;
    return cfg;
}

int cmd_eval(const std::string& fn, const cli_options& opt) {
    qsf::run_config cfg = make_config(opt);
    qsf::cx x = parse_complex(opt.x);
    qsf::cx nu = parse_complex(opt.nu);
    const qsf::q_base& q = cfg.q;
    const qsf::series_params p = cfg.params;
    qsf::series_params tight(p.max_terms * 2, std::max(p.rel_tol * 1e-3, 1e-17), p.stop_run);

    qsf::cx value;
    double est_err = 0.0;
    if (fn == "Aq") {
        value = qsf::ramanujan_aq(x, q, p);
        est_err = std::abs(value - qsf::ramanujan_aq(x, q, tight));
    } else if (fn == "Aiq") {
        value = qsf::qairy_aiq(x, q, p);
        est_err = std::abs(value - qsf::qairy_aiq(x, q, tight));
    } else if (fn == "theta") {
        value = qsf::theta(x, q, p);
        est_err = std::abs(value - qsf::theta_series(x, q, tight));
    } else if (fn == "qpoch") {
        value = qsf::qpochhammer_inf(x, q, p);
        est_err = std::abs(value - qsf::qpochhammer_inf(x, q, tight));
    } else if (fn == "J1" || fn == "J2" || fn == "J3") {
        int kind = fn[1] - '0';
        qsf::bessel_order order{nu, qsf::bessel_mode::generic};
        value = qsf::qbessel(kind, order, x, q, p);
        est_err = std::abs(value - qsf::qbessel(kind, order, x, q, tight));
    } else if (fn == "g") {
        value = qsf::g_eval(x, q, p);
        est_err = std::abs(value - qsf::g_eval(x, q, tight));
    } else if (fn == "laplace_f") {
        qsf::contour_config cc(opt.radius > 0.0 ? opt.radius : 0.5 * q.inv_modulus_squared(),
                               opt.nodes);
        qsf::quadrature_result qr = qsf::q_laplace_contour(x, q, cc, p);
        value = qr.value;
        est_err = qr.est_err;
    } else {
        std::cerr << "unknown function: " << fn
                  << " (expected Aq|Aiq|theta|qpoch|J1|J2|J3|g|laplace_f)\n";
        return 4;
    }

    std::cout << "{\"re\":" << json_number(value.real()) << ",\"im\":"
              << json_number(value.imag()) << ",\"est_err\":" << json_number(est_err)
              << "}\n";
    return 0;
}

int cmd_verify(const std::string& suite, const cli_options& opt) {
    qsf::run_config cfg = make_config(opt);
    if (qsf::suite_registry().find(suite) == qsf::suite_registry().end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 4;
    }
    qsf::verify_report report = qsf::run_suite(suite, cfg);
    if (cfg.format == qsf::report_format::json)
        std::cout << qsf::to_json(report) << "\n";
    else
        std::cout << qsf::to_csv(report);
    std::fprintf(stderr, "[time] %s: %.1f ms\n", suite.c_str(), report.elapsed_ms);
    return report.pass ? 0 : 1;
}

int cmd_sweep(const std::string& suite, const std::string& q_list, const cli_options& opt) {
    if (qsf::suite_registry().find(suite) == qsf::suite_registry().end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 4;
    }
    std::vector<std::string> qs;
    std::string cur;
    for (char c : q_list) {
        if (c == ',') {
            if (!cur.empty()) qs.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) qs.push_back(cur);

    std::cout << "q,suite,max_residual,pass\n";
    int rc = 0;
    for (const auto& qs_str : qs) {
        cli_options one = opt;
        one.q = qs_str;
        qsf::run_config cfg = make_config(one);
        qsf::verify_report report = qsf::run_suite(suite, cfg);
        std::cout << qsf::detail::fmt_complex_flat(cfg.q.value()) << "," << suite << ","
                  << json_number(report.max_residual) << ","
                  << (report.pass ? "true" : "false") << "\n";
        if (!report.pass) rc = 1;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series special functions: evaluation and identity verification"};
    app.require_subcommand(1);

    cli_options opt;
    std::string fn, suite, sweep_suite;

    auto add_common = [&](CLI::App* sub, bool with_q = true) {
        if (with_q) sub->add_option("--q", opt.q, "base q, complex 'a+bi' or real");
        sub->add_option("--trunc", opt.trunc, "max series terms");
        sub->add_option("--tol", opt.tol, "relative tolerance for adaptive summation");
        sub->add_option("--seed", opt.seed, "sampler seed");
        sub->add_option("--points", opt.points, "sample count");
        sub->add_option("--format", opt.format, "output format: json|csv");
        sub->add_option("--radius", opt.radius, "contour radius (0 = default)");
        sub->add_option("--nodes", opt.nodes, "contour node count");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a function at a point");
    eval->add_option("function", fn, "Aq|Aiq|theta|qpoch|J1|J2|J3|g|laplace_f")->required();
    eval->add_option("--x", opt.x, "evaluation point, complex");
    eval->add_option("--nu", opt.nu, "Bessel order (J1/J2/J3)");
    add_common(eval);

    CLI::App* verify = app.add_subcommand("verify", "run an identity-verification suite");
    verify->add_option("suite", suite, "suite name (see README)");
    verify->add_option("--suite", suite, "suite name (alias)");
    add_common(verify);

    CLI::App* sweep = app.add_subcommand("sweep", "run a suite across a q list");
    sweep->add_option("suite", sweep_suite, "suite name");
    sweep->add_option("--suite", sweep_suite, "suite name (alias)");
    std::string q_list;
    sweep->add_option("--q", q_list, "comma-separated q values");
    add_common(sweep, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    }

    try {
        if (eval->parsed()) return cmd_eval(fn, opt);
        if (verify->parsed()) {
            if (suite.empty()) {
                std::cerr << "verify: suite name required\n";
                return 4;
            }
            return cmd_verify(suite, opt);
        }
        if (sweep->parsed()) {
            if (sweep_suite.empty()) {
                std::cerr << "sweep: suite name required\n";
                return 4;
            }
            return cmd_sweep(sweep_suite, q_list, opt);
        }
    } catch (const qsf::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qsf::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qsf::shape_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 4;
}
