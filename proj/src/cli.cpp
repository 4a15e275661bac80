#include "theta/cli.hpp"

#include <chrono>
#include <charconv>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "theta/catalog.hpp"
#include "theta/core_eval.hpp"
#include "theta/notation.hpp"
#include "theta/reduction.hpp"
#include "theta/verify.hpp"

namespace theta::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string normalize_minus(std::string_view text)
{
    static constexpr std::string_view kMinusSign = "\xE2\x88\x92";
    std::string out;
    for (std::size_t i = 0; i < text.size();) {
        if (text.substr(i, kMinusSign.size()) == kMinusSign) {
            out += '-';
            i += kMinusSign.size();
        } else {
            out += text[i++];
        }
    }
    return out;
}

// ddd[.ddd] at the front of s; returns the length consumed, 0 on failure.
std::size_t scan_decimal(std::string_view s)
{
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    const std::size_t int_digits = i;
    if (i < s.size() && s[i] == '.') {
        ++i;
        const std::size_t frac_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == frac_start)
            return 0;
    }
    return int_digits == 0 ? 0 : i;
}

std::optional<double> to_number(std::string_view s)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

Complex parse_flag_complex(const std::string& flag, const std::string& text)
{
    auto z = parse_complex(text);
    if (!z)
        throw UsageError("invalid complex literal for " + flag + ": '" + text +
                         "' (expected A, A+Bi, A-Bi or Bi)");
    return *z;
}

ModularParameter parse_tau(const std::string& text)
{
    const Complex t = parse_flag_complex("--tau", text);
    if (!(t.imag() > 0.0))
        throw UsageError("--tau: Im(tau) must be > 0, got '" + text + "'");
    return ModularParameter{t};
}

std::string fmt_double(double x) { return fmt::format("{}", x + 0.0); }

json complex_json(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json settings_json(const EvalSettings& s)
{
    return json{{"tol", s.tol}, {"max_terms", s.max_terms}};
}

void add_settings_flags(CLI::App* cmd, EvalSettings& settings)
{
    cmd->add_option("--eval-tol", settings.tol, "series truncation tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-terms", settings.max_terms, "series window limit per side")
        ->check(CLI::PositiveNumber);
}

// eval ------------------------------------------------------------------

struct EvalArgs {
    std::optional<int> r;
    std::string chars;
    std::string u = "0";
    std::string tau;
    bool product = false;
    bool big = false;
    bool json_out = false;
    EvalSettings settings;
};

int cmd_eval(const EvalArgs& a, std::ostream& out)
{
    const Complex u = parse_flag_complex("--u", a.u);
    const ModularParameter tau = parse_tau(a.tau);
    if (a.r.has_value() == !a.chars.empty())
        throw UsageError("eval: give exactly one of --r and --char");
    if (!a.r && (a.product || a.big))
        throw UsageError("eval: --product and --big-theta need --r");

    json j{{"u", complex_json(u)}, {"tau", complex_json(tau.value())}};
    std::string text;
    if (a.r) {
        const int r = *a.r;
        const Complex v = a.big ? big_theta(r, u, tau, a.settings) : eval_reduced(r, u, tau, a.settings);
        j["r"] = r;
        j["value"] = complex_json(v);
        text = format_complex(v) + "\n";
        if (a.big)
            j["function"] = "big_theta";
        if (a.product) {
            const Complex p = theta_product(r, u, tau, a.settings);
            const double diff = std::abs(v - p);
            j["product"] = complex_json(p);
            j["difference"] = diff;
            text = "series:     " + format_complex(v) + "\nproduct:    " + format_complex(p) +
                   "\ndifference: " + fmt_double(diff) + "\n";
        }
    } else {
        const auto comma = a.chars.find(',');
        std::optional<double> ca, cb;
        if (comma != std::string::npos) {
            ca = to_number(normalize_minus(a.chars.substr(0, comma)));
            cb = to_number(normalize_minus(a.chars.substr(comma + 1)));
        }
        if (!ca || !cb)
            throw UsageError("invalid value for --char: '" + a.chars + "' (expected a,b)");
        const Complex v = theta_char(Characteristics{*ca, *cb}, u, tau, a.settings);
        j["char"] = json::array({*ca, *cb});
        j["value"] = complex_json(v);
        text = format_complex(v) + "\n";
    }
    if (a.json_out)
        out << j.dump(2) << "\n";
    else
        out << text;
    return kOk;
}

// verify ----------------------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> ids;
    bool all = false;
    std::vector<std::string> families;
    int trials = 200;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    bool stress = false;
    bool direct = false;
    std::string json_path;
    EvalSettings settings;
};

json binding_json(const VariableBinding& b)
{
    json vars = json::object();
    for (const auto& [name, v] : b.values)
        vars[name] = complex_json(v);
    return json{{"tau", complex_json(b.tau.value())}, {"variables", vars}};
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> ids;
    if (a.all)
        for (const auto& id : builtin_catalog())
            ids.push_back(id.id);
    for (const auto& f : a.families) {
        auto sel = ids_with_prefix(f);
        if (sel.empty())
            throw UnknownIdentityError(f + "*");
        ids.insert(ids.end(), sel.begin(), sel.end());
    }
    ids.insert(ids.end(), a.ids.begin(), a.ids.end());
    if (ids.empty())
        throw UsageError("verify: select identities with --id, --family or --all");
    for (const auto& id : ids)
        find_identity(id);

    VerifyOptions opt;
    opt.trials = a.trials;
    opt.seed = a.seed;
    opt.tol = a.tol;
    opt.box = a.stress ? SamplingBox::stress() : SamplingBox::standard();
    opt.mode = a.direct ? EvalMode::Direct : EvalMode::Reduced;
    opt.settings = a.settings;

    const auto start = std::chrono::steady_clock::now();
    const auto reports = verify(ids, opt);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    // With the JSON on stdout the human-readable lines move to stderr.
    std::ostream& text = a.json_path == "-" ? err : out;
    int failed = 0;
    json jr = json::array();
    for (const auto& r : reports) {
        if (r.status != ReportStatus::Pass)
            ++failed;
        json e{{"id", r.id},           {"trials", r.trials},
               {"seed", a.seed},       {"max_abs", r.max_abs},
               {"max_rel", r.max_rel}, {"status", to_string(r.status)}};
        if (r.failing_binding)
            e["failing_binding"] = binding_json(*r.failing_binding);
        if (!r.error.empty())
            e["error"] = r.error;
        jr.push_back(std::move(e));

        std::string line = fmt::format("{:<14} {:<5} trials={} max_rel={:.3e} max_abs={:.3e}",
                                       r.id, to_string(r.status), r.trials, r.max_rel, r.max_abs);
        if (!r.error.empty())
            line += "  error: " + r.error;
        text << line << "\n";
    }
    text << fmt::format("{} of {} identities passed ({} trials each, seed {}, tol {}) in {:.2f} s\n",
                       reports.size() - failed, reports.size(), a.trials, a.seed, a.tol, seconds);

    if (!a.json_path.empty()) {
        const json doc{{"tool", "theta"},
                       {"version", kVersion},
                       {"seed", a.seed},
                       {"trials", a.trials},
                       {"tol", a.tol},
                       {"box", a.stress ? "stress" : "standard"},
                       {"mode", a.direct ? "direct" : "reduced"},
                       {"settings", settings_json(a.settings)},
                       {"reports", jr}};
        if (a.json_path == "-") {
            out << doc.dump(2) << "\n";
        } else {
            std::ofstream f(a.json_path, std::ios::binary);
            if (!f) {
                err << "cannot write " << a.json_path << "\n";
                return kUsage;
            }
            f << doc.dump(2) << "\n";
        }
    }
    return failed == 0 ? kOk : kVerificationFailed;
}

// catalog / zeros / reduce ---------------------------------------------

int cmd_catalog(bool manifest, std::ostream& out)
{
    if (!manifest) {
        out << catalog_tsv();
        return kOk;
    }
    for (const auto& m : catalog_manifest()) {
        std::string ids;
        for (const auto& id : m.ids)
            ids += (ids.empty() ? "" : ",") + id;
        out << m.label << "\t" << (ids.empty() ? "-" : ids) << "\t" << m.note << "\n";
    }
    return kOk;
}

int cmd_zeros(int r, const std::string& tau_text, long nmax, long mmax, std::ostream& out)
{
    const ModularParameter tau = parse_tau(tau_text);
    if (nmax < 0 || mmax < 0)
        throw UsageError("zeros: --nmax and --mmax must be >= 0");
    for (Complex z : zeros_of(r, tau, -nmax, nmax, -mmax, mmax))
        out << format_complex(z) << "\n";
    return kOk;
}

int cmd_reduce(int r, const std::string& u_text, const std::string& tau_text, bool json_out,
               std::ostream& out)
{
    const Complex u = parse_flag_complex("--u", u_text);
    const ModularParameter tau = parse_tau(tau_text);
    const auto [reduced, word] = reduce_tau(tau);
    const auto modular = apply_modular_word(word, r, u, tau);
    const auto [dec, shift] = reduce_u(modular.target(), modular.new_u, modular.new_tau);
    const Complex log_mult = modular.log_multiplier + shift.log_multiplier;
    const int target = modular.target().value();

    if (json_out) {
        const json j{{"word", to_string(word)},
                     {"tau", complex_json(reduced.value())},
                     {"r", target},
                     {"u", complex_json(dec.u0)},
                     {"n", dec.n},
                     {"m", dec.m},
                     {"log_multiplier", complex_json(log_mult)}};
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "word:           " << to_string(word) << "\n"
        << "tau':           " << format_complex(reduced.value()) << "\n"
        << "theta index:    " << r << " -> " << target << "\n"
        << "u':             " << format_complex(dec.u0) << "  (n=" << dec.n << ", m=" << dec.m
        << ")\n"
        << "log multiplier: " << format_complex(log_mult) << "\n";
    return kOk;
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view raw)
{
    const std::string text = normalize_minus(raw);
    std::string_view s = text;
    if (s.empty())
        return std::nullopt;

    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+')
        ++i;
    std::size_t len = scan_decimal(s.substr(i));
    if (len == 0)
        return std::nullopt;
    const auto first = to_number(s.substr(s[0] == '+' ? 1 : 0, i + len - (s[0] == '+' ? 1 : 0)));
    i += len;
    if (!first)
        return std::nullopt;
    if (i == s.size())
        return Complex{*first, 0.0};
    if (s[i] == 'i' && i + 1 == s.size())
        return Complex{0.0, *first};

    if (s[i] != '+' && s[i] != '-')
        return std::nullopt;
    const bool neg = s[i] == '-';
    ++i;
    len = scan_decimal(s.substr(i));
    if (len == 0 || i + len + 1 != s.size() || s[i + len] != 'i')
        return std::nullopt;
    const auto second = to_number(s.substr(i, len));
    if (!second)
        return std::nullopt;
    return Complex{*first, neg ? -*second : *second};
}

std::string format_complex(Complex z)
{
    const double re = z.real() + 0.0;
    const double im = z.imag() + 0.0;
    if (im == 0.0)
        return fmt::format("{}", re);
    if (re == 0.0)
        return fmt::format("{}i", im);
    return fmt::format("{}{}{}i", re, im < 0.0 ? "-" : "+", std::abs(im));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"theta"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Jacobi theta functions: evaluation, reduction and identity verification", "theta"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate theta_r(u|tau) or theta_{a,b}(u|tau)");
    eval->add_option("--r", ea.r, "theta index 1..4")->check(CLI::Range(1, 4));
    eval->add_option("--char", ea.chars, "characteristics a,b");
    eval->add_option("--u", ea.u, "argument, e.g. 0.3+0.1i");
    eval->add_option("--tau", ea.tau, "modular parameter, Im > 0")->required();
    eval->add_flag("--product", ea.product, "also evaluate the triple product");
    eval->add_flag("--big-theta", ea.big, "Riemann's Theta_r(u) = theta_r(u/2K)");
    eval->add_flag("--json", ea.json_out, "JSON output");
    add_settings_flags(eval, ea.settings);

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "verify catalog identities at random bindings");
    ver->add_option("--id", va.ids, "identity id (repeatable)");
    ver->add_flag("--all", va.all, "every catalog identity");
    ver->add_option("--family", va.families, "id prefix, e.g. B.I. (repeatable)");
    ver->add_option("--trials", va.trials, "random bindings per identity")->check(CLI::PositiveNumber);
    ver->add_option("--seed", va.seed, "RNG seed");
    ver->add_option("--tol", va.tol, "relative residual tolerance")->check(CLI::PositiveNumber);
    ver->add_flag("--stress", va.stress, "sample Im(tau) in [1e-3, 0.1]");
    ver->add_flag("--direct", va.direct, "plain series, no reduction");
    ver->add_option("--json", va.json_path, "write the JSON report to PATH ('-' for stdout)");
    add_settings_flags(ver, va.settings);

    bool manifest = false;
    auto* cat = app.add_subcommand("catalog", "print the catalog as ID<TAB>DSL<TAB>label");
    cat->add_flag("--manifest", manifest, "print the label manifest instead");

    int zr = 1;
    std::string ztau;
    long nmax = 1, mmax = 1;
    auto* zer = app.add_subcommand("zeros", "lattice zeros of theta_r");
    zer->add_option("--r", zr, "theta index 1..4")->required()->check(CLI::Range(1, 4));
    zer->add_option("--tau", ztau, "modular parameter")->required();
    zer->add_option("--nmax", nmax, "|n| <= nmax");
    zer->add_option("--mmax", mmax, "|m| <= mmax");

    int rr = 1;
    std::string ru = "0", rtau;
    bool rjson = false;
    auto* red = app.add_subcommand("reduce", "trace tau and u reduction");
    red->add_option("--r", rr, "theta index 1..4")->check(CLI::Range(1, 4));
    red->add_option("--u", ru, "argument");
    red->add_option("--tau", rtau, "modular parameter")->required();
    red->add_flag("--json", rjson, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*eval)
            return cmd_eval(ea, out);
        if (*ver)
            return cmd_verify(va, out, err);
        if (*cat)
            return cmd_catalog(manifest, out);
        if (*zer)
            return cmd_zeros(zr, ztau, nmax, mmax, out);
        if (*red)
            return cmd_reduce(rr, ru, rtau, rjson, out);
    } catch (const UnknownIdentityError& e) {
        err << "error: " << e.what() << "\n";
        return kUnknownId;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace theta::cli
