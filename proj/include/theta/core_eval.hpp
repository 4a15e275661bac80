// Direct series and product evaluation of theta functions.
#pragma once

#include "theta/types.hpp"

namespace theta {

/// Smallest N such that the terms of theta_{a,b}(u|tau) with |k| > N sum to
/// less than tol in absolute value. The bound is the geometric majorant
/// |q|^{(k+a)^2} exp(2 pi |Im u| |k+a|); a is first moved to [-1/2, 1/2] by
/// re-indexing. Throws TruncationError when N would exceed max_terms.
int truncation_index(const ModularParameter& tau, Complex u, double a, double tol,
                     int max_terms = EvalSettings{}.max_terms);

/// theta_{a,b}(u|tau) = sum_k exp{pi i tau (k+a)^2 + 2 pi i (k+a)(u+b)}.
Complex theta_char(const Characteristics& chars, Complex u, const ModularParameter& tau,
                   const EvalSettings& settings = {});

/// theta_r(u|tau) from its own q-series, independent of theta_char.
Complex theta(ThetaIndex r, Complex u, const ModularParameter& tau,
              const EvalSettings& settings = {});

/// Same series as theta(), returned in scaled form with the dominant term's
/// exponent pulled into log_scale.
LogValue theta_scaled(ThetaIndex r, Complex u, const ModularParameter& tau,
                      const EvalSettings& settings = {});

/// theta_r(u|tau) from the Jacobi triple product.
Complex theta_product(ThetaIndex r, Complex u, const ModularParameter& tau,
                      const EvalSettings& settings = {});

struct ThetaConstants {
    Complex dtheta1;  // theta_1'(0)
    Complex theta2;
    Complex theta3;
    Complex theta4;
};

/// (theta_1'(0), theta_2(0), theta_3(0), theta_4(0)). The derivative is the
/// term-wise derivative pi * sum_k (-1)^k (2k+1) q^{(k+1/2)^2}.
ThetaConstants theta_constants(const ModularParameter& tau, const EvalSettings& settings = {});

/// theta_1'(0|tau) in scaled form.
LogValue theta1_prime_zero_scaled(const ModularParameter& tau, const EvalSettings& settings = {});

/// prod_{n>=1} (1 - q^n) / (1 + q^n), the product side of Gauss's formula for
/// theta_4(0|tau).
Complex gauss_product(const ModularParameter& tau, const EvalSettings& settings = {});

}  // namespace theta
