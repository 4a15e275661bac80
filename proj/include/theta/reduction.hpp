// Argument and modulus reduction for theta functions.
//
// Every move is recorded as a ThetaTransformRecord,
//
//     theta_r(u | tau) = exp(log_multiplier) * theta_{index_map(r)}(new_u | new_tau),
//
// so that a value at an arbitrary (u, tau) is recovered exactly from a value in
// the fundamental domain, where the series needs only a handful of terms.
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "theta/types.hpp"

namespace theta {

enum class ModularStep {
    T,         // tau -> tau + 1
    TInverse,  // tau -> tau - 1
    S,         // tau -> -1/tau
};

using ModularWord = std::vector<ModularStep>;

/// Space separated generator names, run-length compressed: "T^-3 S T^2 S".
/// The empty word prints as "I".
std::string to_string(const ModularWord& word);

struct ThetaTransformRecord {
    /// index_map[r - 1] is the theta index on the right-hand side for r.
    std::array<int, 4> index_map{1, 2, 3, 4};
    /// The index the multiplier was computed for.
    ThetaIndex index{1};
    Complex log_multiplier{0.0, 0.0};
    Complex new_u{0.0, 0.0};
    ModularParameter new_tau{Complex{0.0, 1.0}};

    static ThetaTransformRecord identity(ThetaIndex r, Complex u, const ModularParameter& tau);

    ThetaIndex target() const { return ThetaIndex{index_map[index.value() - 1]}; }
    Complex multiplier() const { return std::exp(log_multiplier); }

    /// This record followed by `next`, where `next` starts at this record's
    /// target (index, new_u, new_tau). Permutations compose, logs add.
    ThetaTransformRecord then(const ThetaTransformRecord& next) const;
};

/// u = u0 + n + m * tau.
struct LatticeDecomposition {
    Complex u0{0.0, 0.0};
    long n = 0;
    long m = 0;
};

enum class HalfPeriod {
    Half,         // 1/2
    HalfTau,      // tau/2
    HalfTauOne,   // (tau + 1)/2
};

/// |Re tau| <= 1/2 and |tau| >= 1, with `slack` absorbing round-off at the
/// boundary.
bool in_fundamental_domain(const ModularParameter& tau, double slack = 1e-12);

/// Maps tau into the fundamental domain. Applying the returned word to tau
/// with apply_word reproduces the reduced value bit for bit.
std::pair<ModularParameter, ModularWord> reduce_tau(const ModularParameter& tau);

ModularParameter apply_word(const ModularWord& word, const ModularParameter& tau);

/// One generator applied to theta_r(u|tau). For S the new argument is u/tau.
ThetaTransformRecord apply_modular_step(ModularStep step, ThetaIndex r, Complex u,
                                        const ModularParameter& tau);

/// Composition of apply_modular_step over a word.
ThetaTransformRecord apply_modular_word(const ModularWord& word, ThetaIndex r, Complex u,
                                        const ModularParameter& tau);

/// theta_r(u0 + n + m tau) in terms of theta_r(u0).
ThetaTransformRecord period_shift(ThetaIndex r, long n, long m, Complex u0,
                                  const ModularParameter& tau);

/// Moves u into the centred cell |Re u0| <= 1/2, |Im u0| <= Im(tau)/2.
std::pair<LatticeDecomposition, ThetaTransformRecord> reduce_u(ThetaIndex r, Complex u,
                                                               const ModularParameter& tau);

/// theta_r(u + h | tau) = exp(mu) theta_{r'}(u | tau) for the half period h.
ThetaTransformRecord half_period_shift(ThetaIndex r, HalfPeriod which, Complex u,
                                       const ModularParameter& tau);

/// theta_r(u|tau) through tau and u reduction, in scaled form.
LogValue eval_reduced_scaled(ThetaIndex r, Complex u, const ModularParameter& tau,
                             const EvalSettings& settings = {});

Complex eval_reduced(ThetaIndex r, Complex u, const ModularParameter& tau,
                     const EvalSettings& settings = {});

/// theta_1'(0|tau) through tau reduction, in scaled form.
LogValue eval_dtheta1_reduced_scaled(const ModularParameter& tau,
                                     const EvalSettings& settings = {});

/// Lattice zeros of theta_r for n in [n_min, n_max], m in [m_min, m_max],
/// ordered by m then n.
std::vector<Complex> zeros_of(ThetaIndex r, const ModularParameter& tau, long n_min, long n_max,
                              long m_min, long m_max);

}  // namespace theta
