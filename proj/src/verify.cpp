#include "theta/verify.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "theta/catalog.hpp"
#include "theta/core_eval.hpp"
#include "theta/reduction.hpp"

namespace theta {

namespace {

constexpr double kEps = 1e-300;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Bindings where every term is below 1e-250 carry no information.
const double kDegenerateLog = std::log(1e-250);
constexpr int kMaxResamples = 32;

double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

bool is_half_integer(const Rational& r) { return (r * 2).denominator() == 1; }

// Half of a half-integer rational, as 0 or 1/2 with the integer remainder.
std::pair<bool, Rational> split_half(const Rational& r)
{
    const Rational twice = r * 2;
    const bool half = twice.numerator() % 2 != 0;
    return {half, half ? r - Rational(1, 2) : r};
}

LogValue eval_theta(ThetaIndex r, Complex u, const ModularParameter& tau,
                    const EvalSettings& settings, EvalMode mode)
{
    if (mode == EvalMode::Direct)
        return LogValue{{0.0, 0.0}, theta(r, u, tau, settings)};
    return eval_reduced_scaled(r, u, tau, settings);
}

LogValue eval_factor(const ThetaFactor& f, const VariableBinding& binding,
                     const EvalSettings& settings, EvalMode mode, bool gauss_route)
{
    const ModularParameter big_tau{static_cast<double>(f.tau_multiplier) * binding.tau.value()};
    if (f.kind == ThetaFactor::Kind::DTheta1) {
        if (mode == EvalMode::Direct)
            return LogValue{{0.0, 0.0}, theta1_prime_zero_scaled(big_tau, settings).value()};
        return eval_dtheta1_reduced_scaled(big_tau, settings);
    }
    if (gauss_route && f.index == 4 && f.argument.is_zero())
        return LogValue{{0.0, 0.0}, gauss_product(big_tau, settings)};

    Complex u{0.0, 0.0};
    for (const auto& [name, c] : f.argument.coeffs) {
        auto it = binding.values.find(name);
        if (it == binding.values.end())
            throw std::invalid_argument("binding has no value for variable '" + name + "'");
        u += static_cast<double>(c) * it->second;
    }

    // The tau coefficient is relative to the factor's own modular parameter.
    const Rational s = f.argument.tau_coeff / f.tau_multiplier;
    const Rational p = f.argument.constant;
    if (!is_half_integer(s) || !is_half_integer(p)) {
        u += to_double(p) + to_double(s) * big_tau.value();
        return eval_theta(f.index, u, big_tau, settings, mode);
    }
    const auto [p_half, p_int] = split_half(p);
    const auto [s_half, s_int] = split_half(s);
    u += to_double(p_int) + to_double(s_int) * big_tau.value();
    if (!p_half && !s_half)
        return eval_theta(f.index, u, big_tau, settings, mode);

    const HalfPeriod which = !s_half ? HalfPeriod::Half
                             : p_half ? HalfPeriod::HalfTauOne
                                      : HalfPeriod::HalfTau;
    const auto rec = half_period_shift(f.index, which, u, big_tau);
    LogValue out = eval_theta(rec.target(), u, big_tau, settings, mode);
    out.log_scale += rec.log_multiplier;
    return out;
}

struct TermValue {
    LogValue value;
    int side_sign;  // +1 lhs, -1 rhs
};

std::vector<TermValue> evaluate_terms(const Identity& identity, const VariableBinding& binding,
                                      const EvalSettings& settings, EvalMode mode)
{
    std::vector<TermValue> out;
    auto add_side = [&](const std::vector<Term>& side, int sign, bool gauss_route) {
        for (const Term& t : side) {
            LogValue v{{0.0, 0.0}, {to_double(t.coefficient), 0.0}};
            v.log_scale += static_cast<double>(t.pi_power) * std::log(kPi);
            for (const ThetaFactor& f : t.factors)
                v *= eval_factor(f, binding, settings, mode, gauss_route);
            out.push_back({v, sign});
        }
    };
    add_side(identity.lhs, 1, false);
    add_side(identity.rhs, -1, identity.rhs_route == RhsRoute::GaussProduct);
    return out;
}

double max_log(const std::vector<TermValue>& terms)
{
    double m = kNegInf;
    for (const auto& t : terms)
        m = std::max(m, t.value.log_abs());
    return m;
}

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

class Sampler {
public:
    Sampler(std::uint64_t seed, const SamplingBox& box) : rng_(seed), box_(box) {}

    VariableBinding next(const std::vector<std::string>& variables)
    {
        VariableBinding b;
        b.tau = ModularParameter{Complex{uniform(box_.tau_re_lo, box_.tau_re_hi),
                                         uniform(box_.tau_im_lo, box_.tau_im_hi)}};
        for (const auto& v : variables) {
            const double re = uniform(box_.var_lo, box_.var_hi);
            const double im = uniform(box_.var_lo, box_.var_hi);
            b.values[v] = Complex{re, im};
        }
        return b;
    }

private:
    // Bits to [0,1) explicitly; std::uniform_real_distribution is not
    // reproducible across standard libraries.
    double uniform(double lo, double hi)
    {
        const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        double x = lo + (hi - lo) * unit;
        // Im tau must stay strictly positive.
        return x > lo ? x : lo + (hi - lo) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    SamplingBox box_;
};

Residual residual_of(const std::vector<TermValue>& terms)
{
    const double m = max_log(terms);
    if (m == kNegInf)
        return {0.0, 0.0};
    Complex diff{0.0, 0.0};
    double total = 0.0;
    for (const auto& t : terms) {
        const Complex scaled = std::exp(t.value.log_scale - m) * t.value.mantissa;
        diff += static_cast<double>(t.side_sign) * scaled;
        total += std::abs(scaled);
    }
    Residual r;
    r.abs = std::abs(diff) * std::exp(m);
    // kEps * exp(-m), without underflow or overflow in the exponential.
    const double log_eps_scaled = std::log(kEps) - m;
    const double eps_scaled = log_eps_scaled > 700.0 ? std::numeric_limits<double>::infinity()
                                                     : std::exp(log_eps_scaled);
    r.rel = std::abs(diff) / (eps_scaled + total);
    return r;
}

ResidualReport verify_one(const Identity& identity, const VerifyOptions& options)
{
    ResidualReport report;
    report.id = identity.id;
    Sampler sampler(options.seed + fnv1a(identity.id), options.box);
    double worst_failing = -1.0;
    try {
        for (int trial = 0; trial < options.trials; ++trial) {
            VariableBinding b = sampler.next(identity.variables);
            std::vector<TermValue> terms =
                evaluate_terms(identity, b, options.settings, options.mode);
            for (int k = 0; k < kMaxResamples && max_log(terms) < kDegenerateLog; ++k) {
                b = sampler.next(identity.variables);
                terms = evaluate_terms(identity, b, options.settings, options.mode);
            }
            Residual r = residual_of(terms);
            if (std::isnan(r.rel))
                r.rel = std::numeric_limits<double>::infinity();
            if (std::isnan(r.abs))
                r.abs = std::numeric_limits<double>::infinity();
            ++report.trials;
            report.max_abs = std::max(report.max_abs, r.abs);
            report.max_rel = std::max(report.max_rel, r.rel);
            if (!(r.rel < options.tol) && r.rel > worst_failing) {
                worst_failing = r.rel;
                report.failing_binding = b;
            }
        }
    } catch (const std::exception& e) {
        report.status = ReportStatus::Error;
        report.error = e.what();
        return report;
    }
    report.status = report.failing_binding ? ReportStatus::Fail : ReportStatus::Pass;
    return report;
}

}  // namespace

const char* to_string(ReportStatus status)
{
    switch (status) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::Error: return "error";
    }
    return "error";
}

Residual evaluate_identity(const Identity& identity, const VariableBinding& binding,
                           const EvalSettings& settings, EvalMode mode)
{
    return residual_of(evaluate_terms(identity, binding, settings, mode));
}

double max_log_term(const Identity& identity, const VariableBinding& binding,
                    const EvalSettings& settings, EvalMode mode)
{
    return max_log(evaluate_terms(identity, binding, settings, mode));
}

std::vector<ResidualReport> verify(const std::vector<std::string>& ids,
                                   const VerifyOptions& options)
{
    std::vector<Identity> identities;
    identities.reserve(ids.size());
    for (const auto& id : ids)
        identities.push_back(find_identity(id));
    return verify_identities(identities, options);
}

std::vector<ResidualReport> verify_identities(const std::vector<Identity>& identities,
                                              const VerifyOptions& options)
{
    if (options.trials < 1)
        throw std::invalid_argument("verify: trials must be >= 1");
    options.settings.validate();
    std::vector<ResidualReport> out;
    out.reserve(identities.size());
    for (const auto& identity : identities)
        out.push_back(verify_one(identity, options));
    return out;
}

std::array<Complex, 4> dual_vars(const std::array<Complex, 4>& w)
{
    const Complex sum = w[0] + w[1] + w[2] + w[3];
    std::array<Complex, 4> out;
    for (int k = 0; k < 4; ++k)
        out[k] = 0.5 * sum - w[k];
    return out;
}

Complex bracket_product(const std::array<int, 4>& indices, const std::array<Complex, 4>& wxyz,
                        const ModularParameter& tau, bool primed, const EvalSettings& settings)
{
    const std::array<Complex, 4> args = primed ? dual_vars(wxyz) : wxyz;
    LogValue prod{{0.0, 0.0}, {1.0, 0.0}};
    for (int k = 0; k < 4; ++k)
        prod *= eval_reduced_scaled(indices[k], args[k], tau, settings);
    return prod.value();
}

KoornwinderReport koornwinder_equivalence_check(Complex u, Complex v, Complex x, Complex y,
                                                const ModularParameter& tau,
                                                const EvalSettings& settings)
{
    auto quad = [&](int j, Complex a, Complex b, Complex c, Complex d) {
        return eval_reduced(j, a + b, tau, settings) * eval_reduced(j, a - b, tau, settings) *
               eval_reduced(j, c + d, tau, settings) * eval_reduced(j, c - d, tau, settings);
    };
    KoornwinderReport rep;
    for (int j = 1; j <= 2; ++j) {
        rep.A[j - 1] = quad(j, u, x, v, y);
        rep.B[j - 1] = quad(j, u, y, v, x);
        rep.C[j - 1] = quad(j, u, v, x, y);
    }
    const Complex A1 = rep.A[0], A2 = rep.A[1], B1 = rep.B[0], B2 = rep.B[1], C1 = rep.C[0],
                  C2 = rep.C[1];
    const double scale = kEps + std::abs(A1) + std::abs(A2) + std::abs(B1) + std::abs(B2) +
                         std::abs(C1) + std::abs(C2);
    const Complex diffs[5] = {(A1 - B1) - (B2 - A2), (A1 - C1) - (A2 - C2),
                              (B1 + C1) - (B2 - C2), (A1 - B1) - C1, C1 - (B2 - A2)};
    for (int k = 0; k < 5; ++k) {
        rep.rel[k] = std::abs(diffs[k]) / scale;
        rep.max_rel = std::max(rep.max_rel, rep.rel[k]);
    }
    return rep;
}

}  // namespace theta
