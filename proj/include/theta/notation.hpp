// Other theta conventions in common use, expressed through theta_r(u|tau).
#pragma once

#include <utility>

#include "theta/types.hpp"

namespace theta {

/// Complete elliptic integral of the first kind, K = (pi/2) theta_3(0|tau)^2.
Complex elliptic_K(const ModularParameter& tau, const EvalSettings& settings = {});

/// Riemann's Theta_r(u|tau) = theta_r(u / (2K) | tau).
Complex big_theta(ThetaIndex r, Complex u, const ModularParameter& tau,
                  const EvalSettings& settings = {});

/// z = exp(2 pi i u), q = exp(pi i tau).
std::pair<Complex, Complex> multiplicative_coords(Complex u, const ModularParameter& tau);

enum class CharConvention {
    W,   // Theta^W_{a,b}(u) = exp(pi i a b) theta_{-a/2, b/2}(u)
    HC,  // Theta^HC_{a,b}(u) = exp(-pi i a b / 2) theta_{a/2, b/2}(u)
};

Complex convert_characteristics(CharConvention convention, double a, double b, Complex u,
                                const ModularParameter& tau, const EvalSettings& settings = {});

}  // namespace theta
