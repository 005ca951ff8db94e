// divsum: batch front end for divisor-sum identity verification, divisor
// recovery by matrix inversion, kernel dumps and Mellin cross-checks.
//
// Exit codes: 0 all verdicts pass, 1 some verdict failed, 2 usage/domain
// error, 3 precision insufficient.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "divsum/arith.hpp"
#include "divsum/errors.hpp"
#include "divsum/identities.hpp"
#include "divsum/kernels.hpp"
#include "divsum/mellin.hpp"
#include "divsum/recovery.hpp"
#include "divsum/report.hpp"

namespace {

using namespace divsum;

constexpr int kDisplayDigits = 30;

struct OutputOpts {
    std::string format = "json";  // json | csv
    std::string path;             // empty = stdout
};

void emit(const report::Report& rep, const OutputOpts& out) {
    std::string text = out.format == "csv" ? report::to_csv(rep) : report::to_json(rep);
    if (out.path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    // Write to a temp file in place, then rename: readers never see a
    // half-written report.
    std::string tmp = out.path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ConfigError("cannot open output file " + tmp);
        f << text;
    }
    if (std::rename(tmp.c_str(), out.path.c_str()) != 0)
        throw ConfigError("cannot move report into place at " + out.path);
}

// "0..20" or "7" -> inclusive range.
std::pair<int, int> parse_k_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int k = std::stoi(s);
        return {k, k};
    }
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (hi < lo) throw ConfigError("bad k range " + s);
    return {lo, hi};
}

// "0.5+2i", "-1+0.3i", "3", "2i"
Complex parse_complex(const std::string& s, mpfr_prec_t prec) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ConfigError("empty complex literal");
    if (t.back() == 'i' || t.back() == 'I') {
        t.pop_back();
        // split at the last +/- that is not an exponent sign or leading
        size_t split = std::string::npos;
        for (size_t i = t.size(); i-- > 1;) {
            if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            if (t.empty() || t == "+" || t == "-") t += "1";
            return Complex(Real(0, prec), Real(t, prec));
        }
        std::string re = t.substr(0, split);
        std::string im = t.substr(split);
        if (im == "+" || im == "-") im += "1";
        return Complex(Real(re, prec), Real(im, prec));
    }
    return Complex(Real(t, prec), Real(0, prec));
}

std::string fmt(const Real& x) { return to_sci_string(x, kDisplayDigits); }

report::Item identity_item(const identities::IdentityReport& rep) {
    mpq_class t = rep.target;
    return {
        {"id", rep.spec.id()},
        {"value", fmt(rep.value)},
        {"target", t.get_str()},
        {"abs_error", fmt(rep.abs_error)},
        {"tail_bound", fmt(rep.tail_bound)},
        {"verdict", rep.pass ? "pass" : "fail"},
    };
}

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
    std::string family;
    int a = -1;
    std::string k_range;
    std::string form = "poly";
    long trunc = 40;
    std::string digits = "auto";
    int tol_digits = -1;
    OutputOpts out;
};

int auto_digits_for(const kernels::KernelSpec& spec, long trunc) {
    if (spec.variant == kernels::Variant::bessel_a0)
        return static_cast<int>(std::ceil(2.7288 * (trunc + 1))) + 60;
    return 120;
}

int run_verify(const VerifyArgs& args) {
    std::vector<kernels::KernelSpec> specs;
    kernels::KernelSpec base;
    base.a = args.a;
    if (args.family == "cor3") {
        base.variant = kernels::Variant::cor3;
        specs.push_back(base);
    } else if (args.family == "bessel0") {
        base.variant = kernels::Variant::bessel_a0;
        base.a = 0;
        specs.push_back(base);
    } else if (args.family == "higher-hom") {
        base.variant = kernels::Variant::higher_homogeneous;
        specs.push_back(base);
    } else if (args.family == "higher-inhom") {
        base.variant = kernels::Variant::higher_inhomogeneous;
        specs.push_back(base);
    } else if (args.family == "constraint") {
        base.variant = kernels::Variant::constraint;
        auto [klo, khi] = parse_k_range(args.k_range.empty() ? "0" : args.k_range);
        for (int k = klo; k <= khi; ++k) {
            base.k = k;
            if (args.form == "poly" || args.form == "both") {
                base.form = kernels::KernelForm::poly;
                specs.push_back(base);
            }
            if (args.form == "1f1" || args.form == "both") {
                base.form = kernels::KernelForm::hyp1f1;
                specs.push_back(base);
            }
        }
    } else {
        throw ConfigError("unknown family " + args.family +
                          " (expected cor3|constraint|bessel0|higher-hom|higher-inhom)");
    }

    report::Report rep;
    rep.command = "verify";
    rep.params = {{"family", args.family},
                  {"a", std::to_string(specs.front().a)},
                  {"k", args.k_range.empty() ? "-" : args.k_range},
                  {"form", args.form},
                  {"trunc", std::to_string(args.trunc)},
                  {"digits", args.digits}};
    bool auto_mode = args.digits == "auto";
    for (const auto& spec : specs) {
        spec.validate();
        int digits = auto_mode ? auto_digits_for(spec, args.trunc) : std::stoi(args.digits);
        PrecisionContext ctx(digits);
        identities::IdentityReport r =
            identities::evaluate_identity(spec, args.trunc, ctx, args.tol_digits);
        if (auto_mode) {
            // Never print digits a 1.5x re-run does not confirm.
            PrecisionContext ctx2(digits + digits / 2);
            identities::IdentityReport r2 =
                identities::evaluate_identity(spec, args.trunc, ctx2, args.tol_digits);
            Real scale = abs(r2.value);
            if (scale < 1) scale = Real(1, scale.prec());
            if (abs(r.value - r2.value) > scale * pow10(-kDisplayDigits, scale.prec()))
                throw PrecisionError("verify: two-precision confirmation failed for " + spec.id());
            r = r2;
        }
        rep.digits_used = r.digits;
        rep.items.push_back(identity_item(r));
    }
    emit(rep, args.out);
    return report::all_pass(rep) ? 0 : 1;
}

// --------------------------------------------------------------- recover --

struct RecoverArgs {
    int a = 1;
    long N = 20;  // table size: N equations k = 0..N-1 for unknowns n = 2..N+1
    std::string digits = "auto";
    OutputOpts out{"csv", ""};
};

int run_recover(const RecoverArgs& args) {
    long module_N = args.N + 1;
    recovery::RecoveryResult res;
    if (args.digits == "auto") {
        res = recovery::solve_divisors_auto(args.a, module_N);
    } else {
        PrecisionContext ctx(std::stoi(args.digits));
        res = recovery::solve_divisors(args.a, module_N, ctx);
    }
    report::Report rep;
    rep.command = "recover";
    rep.params = {{"a", std::to_string(args.a)},
                  {"N", std::to_string(args.N)},
                  {"digits", args.digits},
                  {"max_residual", fmt(res.max_residual)}};
    rep.digits_used = res.digits_used;
    long ties = 0;
    for (const auto& row : res.rows) {
        if (row.tie) ++ties;
        rep.items.push_back({
            {"n", std::to_string(row.n)},
            {"approx", to_table_string(row.approx, kDisplayDigits)},
            {"rounded", row.rounded.get_str()},
            {"oracle", row.oracle.get_str()},
            {"match", row.match ? "true" : "false"},
        });
    }
    if (ties > 0) {
        rep.params.emplace_back("rounding_ties", std::to_string(ties));
        std::fprintf(stderr, "warning: %ld rounding tie(s) encountered\n", ties);
    }
    emit(rep, args.out);
    return 0;
}

// ----------------------------------------------------------- kernel-dump --

struct KernelDumpArgs {
    int a = 1;
    int k = 0;
    std::string x_min = "1";
    std::string x_max = "40";
    std::string step = "0.1";
    int digits = 50;
    OutputOpts out{"csv", ""};
};

int run_kernel_dump(const KernelDumpArgs& args) {
    PrecisionContext ctx(args.digits);
    mpfr_prec_t prec = ctx.prec();
    Real x0(args.x_min, prec), x1(args.x_max, prec), h(args.step, prec);
    if (!(h > 0) || x1 < x0) throw ConfigError("kernel-dump: bad sample range");
    report::Report rep;
    rep.command = "kernel-dump";
    rep.params = {{"a", std::to_string(args.a)},
                  {"k", std::to_string(args.k)},
                  {"x_min", args.x_min},
                  {"x_max", args.x_max},
                  {"step", args.step}};
    rep.digits_used = args.digits;
    for (long i = 0;; ++i) {
        Real x = x0 + h * i;
        if (x > x1) break;
        Real v = kernels::constraint_poly_at(args.a, args.k, x, ctx) * exp(-x);
        rep.items.push_back({{"x", fmt(x)}, {"kernel", fmt(v)}});
    }
    emit(rep, args.out);
    return 0;
}

// -------------------------------------------------------------- xi-check --

struct XiCheckArgs {
    int a = 1;
    std::string s0 = "0.5+2i";
    double sigma = 0.0;  // 0 = auto
    int N = 3;
    long trunc = 60;
    int tol_digits = 15;
    OutputOpts out;
};

int run_xi_check(const XiCheckArgs& args) {
    PrecisionContext ctx(std::max(40, args.tol_digits + 25));
    Complex s0 = parse_complex(args.s0, ctx.prec());
    double s0re = s0.re.to_double();

    mellin::LineIntegralSpec lspec;
    lspec.tol_digits = args.tol_digits + 3;
    lspec.abscissa = args.sigma > 0
                         ? args.sigma
                         : std::max({s0re, 1.0 - s0re, static_cast<double>(args.a) - 2.0,
                                     static_cast<double>(args.a) + 1.0}) + 1.0;

    report::Report rep;
    rep.command = "xi-check";
    rep.params = {{"a", std::to_string(args.a)},
                  {"s0", args.s0},
                  {"sigma", std::to_string(lspec.abscissa)},
                  {"N", std::to_string(args.N)},
                  {"trunc", std::to_string(args.trunc)}};
    rep.digits_used = ctx.digits();

    Real tol = pow10(-args.tol_digits, ctx.prec());

    // Integral representation vs direct product.
    Complex direct = mellin::xi_pair_direct(args.a, s0, ctx);
    mellin::IntegralResult integ = mellin::xi_pair_integral(args.a, s0, lspec, args.trunc, ctx);
    Real defect = abs(direct - integ.value);
    rep.items.push_back({
        {"id", "pair_integral:a=" + std::to_string(args.a)},
        {"value", fmt(defect)},
        {"target", "0"},
        {"abs_error", fmt(defect)},
        {"tail_bound", fmt(integ.quad_error + integ.trunc_error)},
        {"verdict", defect <= tol ? "pass" : "fail"},
    });

    // Functional-equation defect of the tail-form Xi_{N,a} under the
    // reflection s0 -> a + 1 - s0 that fixes the product's critical line.
    if (args.N > 0 && (args.a == 1 || args.a == 3 || args.a == 5)) {
        long n_max = args.trunc;
        Complex x1 = mellin::xi_approx_via_tail(args.N, args.a, s0, n_max, ctx);
        Complex refl = Complex(Real(args.a + 1, ctx.prec()), Real(0, ctx.prec())) - s0;
        Complex x2 = mellin::xi_approx_via_tail(args.N, args.a, refl, n_max, ctx);
        Real scale = abs(x1);
        if (scale < 1) scale = Real(1, scale.prec());
        Real fe_defect = abs(x1 - x2) / scale;
        Real fe_tol = pow10(-12, ctx.prec());
        rep.items.push_back({
            {"id", "functional_equation:N=" + std::to_string(args.N)},
            {"value", fmt(fe_defect)},
            {"target", "0"},
            {"abs_error", fmt(fe_defect)},
            {"tail_bound", fmt(fe_tol)},
            {"verdict", fe_defect <= fe_tol ? "pass" : "fail"},
        });
    }
    emit(rep, args.out);
    return report::all_pass(rep) ? 0 : 1;
}

void add_output_flags(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--format", out.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output,-o", out.path, "Write the report to a file (atomic)");
    cmd->add_option("--config", "Configuration file (key=value lines; flags win)");
}

// Apply a key=value config file by injecting flags the command line does not
// already carry; explicit flags therefore always win.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file " + path);
    std::string line;
    while (std::getline(f, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#' || line[start] == '[') continue;
        size_t eq = line.find('=', start);
        if (eq == std::string::npos) throw ConfigError("config line is not key=value: " + line);
        std::string key = line.substr(start, eq - start);
        while (!key.empty() && key.back() == ' ') key.pop_back();
        std::string value = line.substr(eq + 1);
        size_t vs = value.find_first_not_of(" \t");
        value = vs == std::string::npos ? "" : value.substr(vs);
        std::string flag = "--" + key;
        bool present = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
        if (!present) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor-sum identity verification and divisor recovery"};
    app.require_subcommand(1);

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand("verify", "Run identity verification suites");
    verify->add_option("--family", vargs.family,
                       "cor3 | constraint | bessel0 | higher-hom | higher-inhom")
        ->required();
    verify->add_option("--a", vargs.a, "Divisor exponent a");
    verify->add_option("--k", vargs.k_range, "Constraint index or range (e.g. 0..20)");
    verify->add_option("--form", vargs.form, "Kernel form for constraint: poly | 1f1 | both")
        ->check(CLI::IsMember({"poly", "1f1", "both"}));
    verify->add_option("--trunc", vargs.trunc, "Summation cutoff N_trunc");
    verify->add_option("--digits", vargs.digits, "Working digits or 'auto'")
        ->envname("DIVSUM_DIGITS");
    verify->add_option("--tol-digits", vargs.tol_digits,
                       "Require certification to 10^-tol (exit 3 otherwise)");
    add_output_flags(verify, vargs.out);

    RecoverArgs rargs;
    CLI::App* recover = app.add_subcommand("recover", "Recover divisor values by matrix inversion");
    recover->add_option("--a", rargs.a, "Divisor exponent: 1, 3 or 5")->required();
    recover->add_option("--N", rargs.N, "Table size (unknowns n = 2..N+1, as in the tables)")
        ->required();
    recover->add_option("--digits", rargs.digits, "Working digits or 'auto'")
        ->envname("DIVSUM_DIGITS");
    add_output_flags(recover, rargs.out);

    KernelDumpArgs kargs;
    CLI::App* kdump = app.add_subcommand("kernel-dump", "Sample P_k^(a)(x) e^(-x) for plotting");
    kdump->add_option("--a", kargs.a, "Family exponent: 1, 3 or 5")->required();
    kdump->add_option("--k", kargs.k, "Constraint index")->required();
    kdump->add_option("--x-min", kargs.x_min, "Sample range start");
    kdump->add_option("--x-max", kargs.x_max, "Sample range end");
    kdump->add_option("--step", kargs.step, "Sample step");
    kdump->add_option("--digits", kargs.digits, "Working digits");
    add_output_flags(kdump, kargs.out);

    XiCheckArgs xargs;
    CLI::App* xicheck = app.add_subcommand("xi-check", "Mellin cross-checks of xi products");
    xicheck->add_option("--a", xargs.a, "Shift a (integer)");
    xicheck->add_option("--s0", xargs.s0, "Evaluation point, e.g. 0.5+2i");
    xicheck->add_option("--sigma", xargs.sigma, "Integration abscissa (default: auto)");
    xicheck->add_option("--N", xargs.N, "Euler-product cutoff index for the tail form (0 = skip)");
    xicheck->add_option("--trunc", xargs.trunc, "n-sum cutoff");
    xicheck->add_option("--tol-digits", xargs.tol_digits, "Target agreement digits");
    add_output_flags(xicheck, xargs.out);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = apply_config(std::move(args));
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    try {
        // CLI11 takes the argument list in reverse order.
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(vargs);
        if (recover->parsed()) return run_recover(rargs);
        if (kdump->parsed()) return run_kernel_dump(kargs);
        if (xicheck->parsed()) return run_xi_check(xargs);
        std::fprintf(stderr, "no subcommand\n");
        return 2;
    } catch (const PrecisionError& e) {
        std::fprintf(stderr, "precision error: %s\n", e.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
