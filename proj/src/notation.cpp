#include "theta/notation.hpp"

#include "theta/core_eval.hpp"
#include "theta/reduction.hpp"

namespace theta {

Complex elliptic_K(const ModularParameter& tau, const EvalSettings& settings)
{
    const Complex t3 = eval_reduced(3, 0.0, tau, settings);
    return 0.5 * kPi * t3 * t3;
}

Complex big_theta(ThetaIndex r, Complex u, const ModularParameter& tau,
                  const EvalSettings& settings)
{
    return eval_reduced(r, u / (2.0 * elliptic_K(tau, settings)), tau, settings);
}

std::pair<Complex, Complex> multiplicative_coords(Complex u, const ModularParameter& tau)
{
    return {std::exp(2.0 * kPi * kI * u), tau.nome()};
}

Complex convert_characteristics(CharConvention convention, double a, double b, Complex u,
                                const ModularParameter& tau, const EvalSettings& settings)
{
    if (convention == CharConvention::W)
        return std::exp(kI * kPi * a * b) *
               theta_char(Characteristics{-a / 2.0, b / 2.0}, u, tau, settings);
    return std::exp(-kI * kPi * a * b / 2.0) *
           theta_char(Characteristics{a / 2.0, b / 2.0}, u, tau, settings);
}

}  // namespace theta
