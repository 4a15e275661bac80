#include "theta/core_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace theta {

Characteristics Characteristics::canonical() const
{
    return Characteristics{a - std::floor(a), b - std::floor(b)};
}

double LogValue::log_abs() const
{
    const double m = std::abs(mantissa);
    if (m == 0.0)
        return -std::numeric_limits<double>::infinity();
    return log_scale.real() + std::log(m);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_add(double x, double y)
{
    if (x == -kInf)
        return y;
    if (y == -kInf)
        return x;
    const double hi = std::max(x, y);
    return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

// log of exp(-pi T x^2 + 2 pi Y |x|), the magnitude bound on a term at
// offset x = k + a.
double log_majorant(double x, double im_tau, double abs_im_u)
{
    x = std::abs(x);
    return -kPi * im_tau * x * x + 2.0 * kPi * abs_im_u * x;
}

// Bound on log(sum_{j>=0} majorant(x0 + j)), x0 >= 0, by a geometric series
// with the ratio at x0. Infinite while the terms are still growing.
double log_tail(double x0, double im_tau, double abs_im_u)
{
    const double log_ratio = -kPi * im_tau * (2.0 * x0 + 1.0) + 2.0 * kPi * abs_im_u;
    if (x0 < 0.0 || log_ratio >= 0.0)
        return kInf;
    return log_majorant(x0, im_tau, abs_im_u) - std::log1p(-std::exp(log_ratio));
}

// a moved into [-1/2, 1/2] by an integer re-indexing of the series.
double centered_offset(double a) { return a - std::nearbyint(a); }

int truncation_window(double im_tau, double abs_im_u, double a_centered, double log_tol,
                      int max_terms)
{
    // The tail bound cannot be met before the majorant's peak.
    const double peak = abs_im_u / im_tau;
    int start = 0;
    if (peak > 1.0)
        start = static_cast<int>(std::min<double>(peak - 1.0, max_terms));
    for (int n = start; n <= max_terms; ++n) {
        const double lt = log_add(log_tail(n + 1.0 + a_centered, im_tau, abs_im_u),
                                  log_tail(n + 1.0 - a_centered, im_tau, abs_im_u));
        if (lt < log_tol)
            return n;
    }
    throw TruncationError("theta series needs more than max_terms=" + std::to_string(max_terms) +
                          " terms on each side (Im tau=" + std::to_string(im_tau) +
                          ", |Im u|=" + std::to_string(abs_im_u) + "); reduce the arguments");
}

// Tolerance target relative to the largest term. The largest term sits at one of the two lattice points x = k + a around
// the continuous peak -Im u / Im tau; the peak value itself can overshoot by
// a factor up to exp(pi Im tau / 4).
double relative_log_tol(double tol, double im_tau, double im_u, double a)
{
    const double x_star = -im_u / im_tau - a;
    double log_peak = -kInf;
    for (double k : {std::floor(x_star), std::ceil(x_star)}) {
        const double x = k + a;
        log_peak = std::max(log_peak, -kPi * im_tau * x * x - 2.0 * kPi * x * im_u);
    }
    return std::log(tol) + log_peak;
}

}  // namespace

int truncation_index(const ModularParameter& tau, Complex u, double a, double tol, int max_terms)
{
    EvalSettings{tol, max_terms}.validate();
    return truncation_window(tau.imag(), std::abs(u.imag()), centered_offset(a), std::log(tol),
                             max_terms);
}

Complex theta_char(const Characteristics& chars, Complex u, const ModularParameter& tau,
                   const EvalSettings& settings)
{
    settings.validate();
    const double a = centered_offset(chars.a);
    const Complex shifted = u + chars.b;
    const int n = truncation_window(tau.imag(), std::abs(u.imag()), a,
                                    relative_log_tol(settings.tol, tau.imag(), u.imag(), a),
                                    settings.max_terms);
    const Complex t = tau.value();
    Complex sum{0.0, 0.0};
    // Outermost terms first.
    for (int j = n; j >= 0; --j) {
        for (int k : {j, -j}) {
            const double x = k + a;
            sum += std::exp(kI * kPi * t * (x * x) + 2.0 * kI * kPi * x * shifted);
            if (j == 0)
                break;
        }
    }
    return sum;
}

LogValue theta_scaled(ThetaIndex r, Complex u, const ModularParameter& tau,
                      const EvalSettings& settings)
{
    settings.validate();
    const int idx = r.value();
    // Odd function: exact zero rather than the round-off of the partial sum.
    if (idx == 1 && u == Complex{0.0, 0.0})
        return LogValue{};
    const double a = (idx <= 2) ? 0.5 : 0.0;
    const double im_tau = tau.imag();
    const double abs_im_u = std::abs(u.imag());
    const int n = truncation_window(im_tau, abs_im_u, a,
                                    relative_log_tol(settings.tol, im_tau, u.imag(), a),
                                    settings.max_terms);
    const Complex t = tau.value();

    // Dominant term: Re of the exponent pi i tau x^2 + 2 pi i x u peaks at x = -Im u / Im tau.
    const long peak_k = std::clamp<long>(std::lround(-u.imag() / im_tau - a), -n, n);
    const double peak_x = peak_k + a;

    Complex sum{0.0, 0.0};
    for (long k = -n; k <= n; ++k) {
        // Exponent difference to the dominant term, factored so the integer
        // offset d is exact.
        const double d = static_cast<double>(k - peak_k);
        const double s = (k + a) + peak_x;
        Complex term = std::exp(kI * kPi * d * (t * s + 2.0 * u));
        if ((idx == 1 || idx == 4) && (k & 1))
            term = -term;
        sum += term;
    }
    if (idx == 1)
        sum *= -kI;

    LogValue out;
    out.log_scale = kI * kPi * (t * (peak_x * peak_x) + 2.0 * peak_x * u);
    out.mantissa = sum;
    return out;
}

Complex theta(ThetaIndex r, Complex u, const ModularParameter& tau, const EvalSettings& settings)
{
    return theta_scaled(r, u, tau, settings).value();
}

Complex theta_product(ThetaIndex r, Complex u, const ModularParameter& tau,
                      const EvalSettings& settings)
{
    settings.validate();
    const int idx = r.value();
    const Complex q = tau.nome();
    const double abs_q = std::abs(q);
    const Complex z = std::exp(2.0 * kI * kPi * u);
    const Complex z_inv = 1.0 / z;
    const double z_max = std::exp(2.0 * kPi * std::abs(u.imag()));
    const double sign = (idx == 1 || idx == 4) ? -1.0 : 1.0;
    const bool odd_powers = idx >= 3;

    const Complex q2 = q * q;
    Complex q_even = 1.0;        // q^{2n}
    Complex q_odd = 1.0 / q;     // q^{2n-1}, advanced before use
    Complex prod = 1.0;
    double abs_q_odd = 1.0 / abs_q;
    double abs_q_even = 1.0;
    for (int n = 1;; ++n) {
        if (n > settings.max_terms)
            throw TruncationError("theta product did not converge within max_terms=" +
                                  std::to_string(settings.max_terms) + " factors");
        q_even *= q2;
        q_odd *= q2;
        abs_q_even *= abs_q * abs_q;
        abs_q_odd *= abs_q * abs_q;
        const Complex p = odd_powers ? q_odd : q_even;
        prod *= (1.0 - q_even) * (1.0 + sign * p * z) * (1.0 + sign * p * z_inv);
        const double delta = (odd_powers ? abs_q_odd : abs_q_even) * abs_q * abs_q * z_max;
        if (delta / (1.0 - abs_q * abs_q) < settings.tol)
            break;
    }
    if (idx == 1)
        return 2.0 * std::exp(kI * kPi * tau.value() / 4.0) * std::sin(kPi * u) * prod;
    if (idx == 2)
        return 2.0 * std::exp(kI * kPi * tau.value() / 4.0) * std::cos(kPi * u) * prod;
    return prod;
}

LogValue theta1_prime_zero_scaled(const ModularParameter& tau, const EvalSettings& settings)
{
    settings.validate();
    // The (2k+1) weight slows the tail slightly relative to theta_1 itself.
    const int n = truncation_index(tau, 0.0, 0.5, settings.tol, settings.max_terms) + 2;
    const Complex t = tau.value();
    Complex sum{0.0, 0.0};
    for (int k = n; k >= 0; --k) {
        const double w = (k & 1) ? -(2.0 * k + 1.0) : (2.0 * k + 1.0);
        sum += w * std::exp(kI * kPi * t * static_cast<double>(k) * (k + 1.0));
    }
    LogValue out;
    out.log_scale = kI * kPi * t / 4.0;
    out.mantissa = 2.0 * kPi * sum;
    return out;
}

ThetaConstants theta_constants(const ModularParameter& tau, const EvalSettings& settings)
{
    return ThetaConstants{theta1_prime_zero_scaled(tau, settings).value(),
                          theta(2, 0.0, tau, settings), theta(3, 0.0, tau, settings),
                          theta(4, 0.0, tau, settings)};
}

Complex gauss_product(const ModularParameter& tau, const EvalSettings& settings)
{
    settings.validate();
    const Complex q = tau.nome();
    const double abs_q = std::abs(q);
    Complex qn = 1.0;
    double abs_qn = 1.0;
    Complex prod = 1.0;
    for (int n = 1;; ++n) {
        if (n > settings.max_terms)
            throw TruncationError("Gauss product did not converge within max_terms=" +
                                  std::to_string(settings.max_terms) + " factors");
        qn *= q;
        abs_qn *= abs_q;
        prod *= (1.0 - qn) / (1.0 + qn);
        if (2.0 * abs_qn * abs_q / (1.0 - abs_q) < settings.tol)
            break;
    }
    return prod;
}

}  // namespace theta
