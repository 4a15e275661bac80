// Basic value types shared by every part of the theta library.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace theta {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr Complex kI{0.0, 1.0};

/// Raised when the series window required for the requested accuracy exceeds
/// EvalSettings::max_terms. Reducing the arguments first avoids it.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Modular parameter tau in the upper half plane.
class ModularParameter {
public:
    explicit ModularParameter(Complex tau) : tau_(tau)
    {
        if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
            throw std::domain_error("modular parameter requires finite tau with Im(tau) > 0");
    }

    Complex value() const { return tau_; }
    double imag() const { return tau_.imag(); }
    double real() const { return tau_.real(); }

    /// q = exp(pi i tau); |q| < 1 by construction.
    Complex nome() const { return std::exp(kI * kPi * tau_); }

    friend bool operator==(const ModularParameter&, const ModularParameter&) = default;

private:
    Complex tau_;
};

/// Real characteristics (a, b) of theta_{a,b}.
struct Characteristics {
    double a = 0.0;
    double b = 0.0;

    Characteristics() = default;
    Characteristics(double a_, double b_) : a(a_), b(b_)
    {
        if (!std::isfinite(a) || !std::isfinite(b))
            throw std::domain_error("characteristics must be finite");
    }

    /// Representative with 0 <= a, b < 1. Only a shift in a leaves the
    /// function unchanged; a shift in b multiplies it by exp(2 pi i a).
    Characteristics canonical() const;
};

/// Subscript r of the four Jacobi theta functions.
class ThetaIndex {
public:
    constexpr ThetaIndex(int r) : r_(r)
    {
        if (r < 1 || r > 4)
            throw std::domain_error("theta index must be in {1,2,3,4}, got " + std::to_string(r));
    }
    constexpr int value() const { return r_; }
    friend constexpr bool operator==(ThetaIndex, ThetaIndex) = default;

private:
    int r_;
};

struct EvalSettings {
    double tol = 1e-15;
    int max_terms = 1000;

    EvalSettings() = default;
    EvalSettings(double tol_, int max_terms_) : tol(tol_), max_terms(max_terms_) { validate(); }

    void validate() const
    {
        if (!(tol > 0.0))
            throw std::domain_error("EvalSettings.tol must be positive");
        if (max_terms < 1)
            throw std::domain_error("EvalSettings.max_terms must be >= 1");
    }
};

/// A complex number held as exp(log_scale) * mantissa. Theta values far from
/// the origin of the u-plane or at small Im(tau) leave the double range; this
/// form keeps them representable.
struct LogValue {
    Complex log_scale{0.0, 0.0};
    Complex mantissa{0.0, 0.0};

    Complex value() const { return std::exp(log_scale) * mantissa; }

    /// log|value|, -inf for an exact zero.
    double log_abs() const;

    LogValue& operator*=(const LogValue& other)
    {
        log_scale += other.log_scale;
        mantissa *= other.mantissa;
        return *this;
    }
};

inline LogValue operator*(LogValue lhs, const LogValue& rhs) { return lhs *= rhs; }

}  // namespace theta
