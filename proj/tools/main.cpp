// Command-line front end: compute pi with a chosen scheme and identity,
// run the verification suites, or benchmark the schemes.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "borpi/errors.hpp"
#include "borpi/initial_values.hpp"
#include "borpi/iterations.hpp"
#include "borpi/machin.hpp"
#include "borpi/report.hpp"
#include "borpi/series.hpp"
#include "borpi/wz.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct Options {
    std::string mode;
    std::string scheme = "borwein4";
    int identity = 1;
    long digits = 50;
    std::string format = "text";
    std::string digits_file;
    std::string set_file;
    long max_iters = 0;
    long max_terms = 4000;
    long guard = -1;
    std::string k_values = "0,1,2,3";
    long tol_digits = -1;
};

std::vector<int> parse_k_values(const std::string& text) {
    std::vector<int> ks;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int k = std::stoi(item, &used);
        if (used != item.size() || k < 0)
            throw borpi::ParseError("bad k value '" + item + "'");
        ks.push_back(k);
    }
    if (ks.empty()) throw borpi::ParseError("empty k value list");
    return ks;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw borpi::ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_compute(const Options& opt) {
    borpi::Scheme scheme = borpi::scheme_from_name(opt.scheme);
    borpi::RunOptions run_opts{opt.max_iters, opt.guard};

    borpi::RunResult result = [&] {
        if (!opt.set_file.empty()) {
            borpi::InitialValueSet set = borpi::load_initial_value_set(opt.set_file);
            borpi::validate_initial_value_set(set, borpi::with_precision(50, 0));
            return borpi::run(scheme, set, opt.digits, run_opts);
        }
        return borpi::run(scheme, opt.identity, opt.digits, run_opts);
    }();

    std::string oracle;
    std::string reference;
    if (!opt.digits_file.empty()) {
        oracle = "digits-file";
        reference = read_file(opt.digits_file);
    } else {
        oracle = "machin";
        borpi::PrecisionContext ref_ctx = borpi::with_precision(opt.digits + 20, 10);
        reference = borpi::machin_pi(ref_ctx).to_fixed(opt.digits + 10);
    }
    long verified = std::min(borpi::compare_digits(result.pi, reference), opt.digits);

    if (opt.format == "json")
        std::cout << borpi::run_report_json(result, verified, oracle).dump(2) << "\n";
    else
        std::cout << borpi::run_report_text(result, verified, oracle);
    return verified >= opt.digits ? kExitOk : kExitVerification;
}

int run_verify_identities(const Options& opt) {
    borpi::PrecisionContext ctx = borpi::with_precision(opt.digits, 0);
    borpi::BigReal tol = borpi::pow10(-ctx.working_digits() + 8, ctx);
    bool all_ok = true;
    json rows = json::array();
    for (int id = 1; id <= 5; ++id) {
        borpi::BigReal residual = borpi::verify_identity_product(id, ctx, opt.max_terms);
        bool ok = residual <= tol;
        all_ok = all_ok && ok;
        rows.push_back({{"identity", id},
                        {"residual", residual.to_sci(3)},
                        {"tolerance", tol.to_sci(3)},
                        {"pass", ok}});
        if (opt.format != "json")
            std::cout << "identity " << id << ": residual " << residual.to_sci(3)
                      << "  tolerance " << tol.to_sci(3) << "  " << (ok ? "pass" : "FAIL")
                      << "\n";
    }
    if (opt.format == "json") std::cout << rows.dump(2) << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

int run_verify_transforms(const Options& opt) {
    borpi::PrecisionContext ctx = borpi::with_precision(opt.digits, 0);
    long wd = ctx.working_digits();
    borpi::BigReal quad_tol = borpi::pow10(-wd + 6, ctx);
    borpi::BigReal ode_tol = borpi::pow10(-wd + 8, ctx);
    borpi::BigReal clausen_tol = borpi::pow10(-wd + 6, ctx);

    struct Point {
        const char* label;
        borpi::BigReal x;
    };
    std::vector<Point> descent_points;
    descent_points.push_back({"0.1", borpi::BigReal::rational(1, 10, ctx)});
    descent_points.push_back({"0.3", borpi::BigReal::rational(3, 10, ctx)});
    descent_points.push_back(
        {"1/sqrt(2)", borpi::sqrt(borpi::BigReal::rational(1, 2, ctx), ctx)});
    descent_points.push_back({"0.9", borpi::BigReal::rational(9, 10, ctx)});

    bool all_ok = true;
    json rows = json::array();
    auto record = [&](const std::string& check, const std::string& label,
                      const borpi::BigReal& residual, const borpi::BigReal& tol, long terms_note) {
        bool ok = residual <= tol;
        all_ok = all_ok && ok;
        rows.push_back({{"check", check},
                        {"x", label},
                        {"residual", residual.to_sci(3)},
                        {"tolerance", tol.to_sci(3)},
                        {"pass", ok}});
        if (opt.format != "json") {
            std::cout << check << " at x=" << label << ": residual " << residual.to_sci(3)
                      << "  tolerance " << tol.to_sci(3) << "  " << (ok ? "pass" : "FAIL");
            if (terms_note > 10000) std::cout << "  (slow series, " << terms_note << "+ terms)";
            std::cout << "\n";
        }
    };

    for (const auto& p : descent_points) {
        record("quadratic-transform", p.label, borpi::verify_quadratic_transform(p.x, ctx),
               quad_tol, 0);
        record("ode-residual", p.label, borpi::ode_residual(p.x, ctx), ode_tol, 0);
    }
    std::vector<Point> clausen_points;
    clausen_points.push_back({"0.01", borpi::BigReal::rational(1, 100, ctx)});
    clausen_points.push_back({"0.2", borpi::BigReal::rational(1, 5, ctx)});
    clausen_points.push_back({"0.7", borpi::BigReal::rational(7, 10, ctx)});
    for (const auto& p : clausen_points) {
        long note = p.label == std::string("0.7") ? 100000 : 0;
        record("clausen", p.label, borpi::verify_clausen(p.x, ctx), clausen_tol, note);
    }

    if (opt.format == "json") std::cout << rows.dump(2) << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

int run_verify_wz(const Options& opt) {
    borpi::PrecisionContext ctx = borpi::with_precision(opt.digits, 0);
    std::vector<int> ks = parse_k_values(opt.k_values);
    borpi::WzOptions wz_opts{opt.max_terms, opt.tol_digits};

    bool all_ok = true;
    json rows = json::array();
    for (int id = 1; id <= 5; ++id) {
        borpi::WzCheckResult res = borpi::verify_wz_pair(id, ks, ctx, wz_opts);
        bool ok = res.pass();
        all_ok = all_ok && ok;
        json residuals = json::array();
        for (const auto& r : res.residuals)
            residuals.push_back(
                {{"k", r.k}, {"member", r.member}, {"residual", r.residual.to_sci(3)}});
        rows.push_back({{"identity", id},
                        {"C1", res.C1.to_sci(12)},
                        {"C2", res.C2.to_sci(12)},
                        {"product_residual", res.product_residual.to_sci(3)},
                        {"residuals", residuals},
                        {"pass", ok}});
        if (opt.format != "json") {
            std::cout << "identity " << id << ": C1*C2 vs 1/pi residual "
                      << res.product_residual.to_sci(3) << " (tolerance "
                      << res.product_tolerance.to_sci(3) << ")\n";
            for (const auto& r : res.residuals)
                std::cout << "  k=" << r.k << " member " << r.member << ": residual "
                          << r.residual.to_sci(3) << "  tolerance " << res.tolerance.to_sci(3)
                          << "\n";
            std::cout << "  " << (ok ? "pass" : "FAIL") << "\n";
        }
    }
    if (opt.format == "json") std::cout << rows.dump(2) << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

int run_bench(const Options& opt) {
    borpi::PrecisionContext ref_ctx = borpi::with_precision(opt.digits + 20, 10);
    std::string reference = borpi::machin_pi(ref_ctx).to_fixed(opt.digits + 10);

    json rows = json::array();
    bool all_ok = true;
    for (borpi::Scheme scheme :
         {borpi::Scheme::FullQuadratic, borpi::Scheme::Simplified,
          borpi::Scheme::BorweinQuadratic, borpi::Scheme::BorweinQuartic}) {
        auto t0 = std::chrono::steady_clock::now();
        borpi::RunResult result = borpi::run(scheme, opt.identity, opt.digits,
                                             borpi::RunOptions{opt.max_iters, opt.guard});
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        long verified = std::min(borpi::compare_digits(result.pi, reference), opt.digits);
        all_ok = all_ok && verified >= opt.digits;
        rows.push_back({{"scheme", std::string(scheme_name(scheme))},
                        {"iterations", result.iterations_used},
                        {"ms", ms},
                        {"digits_verified", verified}});
        if (opt.format != "json") {
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(1);
            line << scheme_name(scheme) << ": " << result.iterations_used << " iterations, "
                 << ms << " ms, " << verified << " digits verified";
            std::cout << line.str() << "\n";
        }
    }
    if (opt.format == "json") std::cout << rows.dump(2) << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Borwein-type quadratic and quartic iterations for pi, with a "
                 "hypergeometric series verifier"};
    app.get_formatter()->column_width(34);

    Options opt;
    app.add_option("--mode", opt.mode, "compute | verify-identities | verify-wz | "
                                       "verify-transforms | bench")
        ->required();
    app.add_option("--scheme", opt.scheme, "full | simplified | borwein2 | borwein4");
    app.add_option("--identity", opt.identity, "initial-value set, 1..5");
    app.add_option("--digits", opt.digits, "requested decimal digits / working precision");
    app.add_option("--format", opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--digits-file", opt.digits_file, "reference pi digits file (compute)");
    app.add_option("--set-file", opt.set_file, "user initial-value set file (compute)");
    app.add_option("--max-iters", opt.max_iters, "override the iteration cap");
    app.add_option("--max-terms", opt.max_terms, "series term cap (default 4000)");
    app.add_option("--guard", opt.guard, "override guard digits");
    app.add_option("--k-values", opt.k_values, "comma list of k values (verify-wz)");
    app.add_option("--tol-digits", opt.tol_digits,
                   "per-k residual tolerance digits (verify-wz; default working/2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (opt.mode == "compute") {
            if (opt.digits < 1) throw borpi::DomainError("--digits must be at least 1");
            if (opt.set_file.empty() && (opt.identity < 1 || opt.identity > 5))
                throw borpi::DomainError("identity must be 1..5");
            return run_compute(opt);
        }
        if (opt.mode == "verify-identities") return run_verify_identities(opt);
        if (opt.mode == "verify-transforms") return run_verify_transforms(opt);
        if (opt.mode == "verify-wz") return run_verify_wz(opt);
        if (opt.mode == "bench") return run_bench(opt);
        std::cerr << "error: unknown mode '" << opt.mode << "'\n";
        return kExitUsage;
    } catch (const borpi::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const borpi::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const borpi::Error& e) {
        // precision / convergence / divergence: the computation could not
        // meet the requested accuracy
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}
