// Numerical verification of identities over random bindings.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/identity.hpp"
#include "theta/types.hpp"

namespace theta {

struct VariableBinding {
    std::map<std::string, Complex> values;
    ModularParameter tau{Complex{0.0, 1.0}};
};

enum class EvalMode {
    Reduced,  // tau and u reduction before the series
    Direct,   // theta() at the given arguments: plain double series, no reduction
};

struct Residual {
    double abs = 0.0;
    double rel = 0.0;
};

/// Residual of lhs - rhs at one binding. rel = |lhs - rhs| / (1e-300 + sum |term|),
/// computed in scaled form so that huge or tiny terms do not overflow.
/// Throws std::invalid_argument when a variable is unbound.
Residual evaluate_identity(const Identity& identity, const VariableBinding& binding,
                           const EvalSettings& settings = {}, EvalMode mode = EvalMode::Reduced);

/// Largest log|term| over both sides; -inf when every term vanishes.
double max_log_term(const Identity& identity, const VariableBinding& binding,
                    const EvalSettings& settings = {}, EvalMode mode = EvalMode::Reduced);

struct SamplingBox {
    double var_lo = -1.0;
    double var_hi = 1.0;
    double tau_re_lo = -0.5;
    double tau_re_hi = 0.5;
    double tau_im_lo = 0.5;
    double tau_im_hi = 2.0;

    static SamplingBox standard() { return {}; }
    /// Im tau in [1e-3, 0.1].
    static SamplingBox stress()
    {
        SamplingBox b;
        b.tau_im_lo = 1e-3;
        b.tau_im_hi = 0.1;
        return b;
    }
};

struct VerifyOptions {
    int trials = 200;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    SamplingBox box = SamplingBox::standard();
    EvalMode mode = EvalMode::Reduced;
    EvalSettings settings{};
};

enum class ReportStatus { Pass, Fail, Error };

const char* to_string(ReportStatus status);

struct ResidualReport {
    std::string id;
    int trials = 0;
    double max_abs = 0.0;
    double max_rel = 0.0;
    std::optional<VariableBinding> failing_binding;  // worst binding above tol
    ReportStatus status = ReportStatus::Pass;
    std::string error;  // evaluation failure message when status is Error
};

/// Catalog ids; throws UnknownIdentityError before any evaluation.
std::vector<ResidualReport> verify(const std::vector<std::string>& ids,
                                   const VerifyOptions& options = {});

std::vector<ResidualReport> verify_identities(const std::vector<Identity>& identities,
                                              const VerifyOptions& options = {});

/// (W', X', Y', Z') = (-W+X+Y+Z, W-X+Y+Z, W+X-Y+Z, W+X+Y-Z) / 2.
std::array<Complex, 4> dual_vars(const std::array<Complex, 4>& wxyz);

/// theta_p(W) theta_q(X) theta_r(Y) theta_s(Z), at the dual variables when primed.
Complex bracket_product(const std::array<int, 4>& indices, const std::array<Complex, 4>& wxyz,
                        const ModularParameter& tau, bool primed,
                        const EvalSettings& settings = {});

struct KoornwinderReport {
    std::array<Complex, 2> A, B, C;  // index j-1
    std::array<double, 5> rel{};     // the five relations, in the order listed below
    double max_rel = 0.0;
};

/// A_j = theta_j(u+x) theta_j(u-x) theta_j(v+y) theta_j(v-y),
/// B_j = theta_j(u+y) theta_j(u-y) theta_j(v+x) theta_j(v-x),
/// C_j = theta_j(u+v) theta_j(u-v) theta_j(x+y) theta_j(x-y), and the relations
/// A1-B1 = B2-A2, A1-C1 = A2-C2, B1+C1 = B2-C2, A1-B1 = C1, C1 = B2-A2.
KoornwinderReport koornwinder_equivalence_check(Complex u, Complex v, Complex x, Complex y,
                                                const ModularParameter& tau,
                                                const EvalSettings& settings = {});

}  // namespace theta
