#include "theta/reduction.hpp"

#include <cmath>
#include <stdexcept>

#include "theta/core_eval.hpp"

namespace theta {

namespace {

constexpr std::array<int, 4> kSwap34{1, 2, 4, 3};
constexpr std::array<int, 4> kSwap24{1, 4, 3, 2};

// Guard for reduce_tau; the loop terminates because every S step strictly
// increases Im(tau).
constexpr int kMaxReductionSteps = 100000;

std::array<int, 4> compose(const std::array<int, 4>& first, const std::array<int, 4>& second)
{
    std::array<int, 4> out{};
    for (int r = 0; r < 4; ++r)
        out[r] = second[first[r] - 1];
    return out;
}

// Powers of i as logarithms: 1, i, -1, -i.
Complex log_unit(int quarter_turns)
{
    const int k = ((quarter_turns % 4) + 4) % 4;
    return kI * (kPi / 2.0) * static_cast<double>(k == 3 ? -1 : k);
}

// Visits the word as maximal runs of T / T^-1 (net signed count) and single
// S steps. Both reduce_tau and every consumer of a word go through this so
// that tau arithmetic is identical.
template <class RunFn, class SFn>
void for_each_run(const ModularWord& word, RunFn on_run, SFn on_s)
{
    long run = 0;
    bool in_run = false;
    for (ModularStep step : word) {
        if (step == ModularStep::S) {
            if (in_run)
                on_run(run);
            run = 0;
            in_run = false;
            on_s();
        } else {
            run += (step == ModularStep::T) ? 1 : -1;
            in_run = true;
        }
    }
    if (in_run)
        on_run(run);
}

Complex translate(Complex tau, long count) { return tau + static_cast<double>(count); }
Complex invert(Complex tau) { return -1.0 / tau; }

}  // namespace

std::string to_string(const ModularWord& word)
{
    std::string out;
    auto append = [&out](const std::string& token) {
        if (!out.empty())
            out += ' ';
        out += token;
    };
    for_each_run(
        word,
        [&](long run) {
            if (run == 0)
                return;
            std::string token = "T";
            if (run != 1)
                token += "^" + std::to_string(run);
            append(token);
        },
        [&] { append("S"); });
    return out.empty() ? "I" : out;
}

ThetaTransformRecord ThetaTransformRecord::identity(ThetaIndex r, Complex u,
                                                    const ModularParameter& tau)
{
    ThetaTransformRecord rec;
    rec.index = r;
    rec.new_u = u;
    rec.new_tau = tau;
    return rec;
}

ThetaTransformRecord ThetaTransformRecord::then(const ThetaTransformRecord& next) const
{
    if (!(next.index == target()))
        throw std::invalid_argument("record composition: next record starts at index " +
                                    std::to_string(next.index.value()) + ", expected " +
                                    std::to_string(target().value()));
    ThetaTransformRecord out;
    out.index_map = compose(index_map, next.index_map);
    out.index = index;
    out.log_multiplier = log_multiplier + next.log_multiplier;
    out.new_u = next.new_u;
    out.new_tau = next.new_tau;
    return out;
}

bool in_fundamental_domain(const ModularParameter& tau, double slack)
{
    return std::abs(tau.real()) <= 0.5 + slack && std::norm(tau.value()) >= 1.0 - slack;
}

std::pair<ModularParameter, ModularWord> reduce_tau(const ModularParameter& tau)
{
    ModularWord word;
    Complex t = tau.value();
    for (int iter = 0; iter < kMaxReductionSteps; ++iter) {
        const long shift = -std::lround(t.real());
        if (shift != 0) {
            t = translate(t, shift);
            word.insert(word.end(), static_cast<std::size_t>(std::labs(shift)),
                        shift > 0 ? ModularStep::T : ModularStep::TInverse);
        }
        // Boundary ties are left alone; the slack keeps S from bouncing a
        // point with |tau| = 1 back and forth.
        if (std::norm(t) >= 1.0 - 1e-14)
            return {ModularParameter{t}, word};
        t = invert(t);
        word.push_back(ModularStep::S);
    }
    throw std::logic_error("reduce_tau did not terminate");
}

ModularParameter apply_word(const ModularWord& word, const ModularParameter& tau)
{
    Complex t = tau.value();
    for_each_run(word, [&](long run) { t = translate(t, run); }, [&] { t = invert(t); });
    return ModularParameter{t};
}

ThetaTransformRecord apply_modular_step(ModularStep step, ThetaIndex r, Complex u,
                                        const ModularParameter& tau)
{
    ThetaTransformRecord rec;
    rec.index = r;
    const int idx = r.value();
    const Complex t = tau.value();
    switch (step) {
    case ModularStep::T:
    case ModularStep::TInverse: {
        const long dir = (step == ModularStep::T) ? 1 : -1;
        rec.index_map = kSwap34;
        rec.new_u = u;
        rec.new_tau = ModularParameter{translate(t, dir)};
        // theta_{1,2}(u|tau+1) = e^{i pi/4} theta_{1,2}(u|tau).
        if (idx <= 2)
            rec.log_multiplier = -static_cast<double>(dir) * kI * kPi / 4.0;
        break;
    }
    case ModularStep::S: {
        rec.index_map = kSwap24;
        rec.new_u = u / t;
        rec.new_tau = ModularParameter{invert(t)};
        // Principal log: Re(-i tau) > 0, so Re sqrt(-i tau) > 0.
        rec.log_multiplier = -0.5 * std::log(-kI * t) - kI * kPi * u * u / t;
        if (idx == 1)
            rec.log_multiplier += kI * kPi / 2.0;
        break;
    }
    }
    return rec;
}

ThetaTransformRecord apply_modular_word(const ModularWord& word, ThetaIndex r, Complex u,
                                        const ModularParameter& tau)
{
    ThetaTransformRecord rec = ThetaTransformRecord::identity(r, u, tau);
    for (ModularStep step : word)
        rec = rec.then(apply_modular_step(step, rec.target(), rec.new_u, rec.new_tau));
    return rec;
}

ThetaTransformRecord period_shift(ThetaIndex r, long n, long m, Complex u0,
                                  const ModularParameter& tau)
{
    // theta_{a,b}(u + n + m tau) = (-1)^{2an + 2bm} e^{-pi i(2 m u + m^2 tau)} theta_{a,b}(u)
    // for half-integer a, b; theta_1 = -theta_{1/2,1/2} carries no extra sign.
    long sign_exp = 0;
    switch (r.value()) {
    case 1: sign_exp = n + m; break;
    case 2: sign_exp = n; break;
    case 3: sign_exp = 0; break;
    case 4: sign_exp = m; break;
    }
    const double md = static_cast<double>(m);
    ThetaTransformRecord rec;
    rec.index = r;
    rec.new_u = u0;
    rec.new_tau = tau;
    rec.log_multiplier = -kI * kPi * (2.0 * md * u0 + md * md * tau.value());
    if (sign_exp % 2 != 0)
        rec.log_multiplier += kI * kPi;
    return rec;
}

std::pair<LatticeDecomposition, ThetaTransformRecord> reduce_u(ThetaIndex r, Complex u,
                                                               const ModularParameter& tau)
{
    LatticeDecomposition dec;
    dec.m = std::lround(u.imag() / tau.imag());
    const Complex u1 = u - static_cast<double>(dec.m) * tau.value();
    dec.n = std::lround(u1.real());
    dec.u0 = u1 - static_cast<double>(dec.n);
    return {dec, period_shift(r, dec.n, dec.m, dec.u0, tau)};
}

ThetaTransformRecord half_period_shift(ThetaIndex r, HalfPeriod which, Complex u,
                                       const ModularParameter& tau)
{
    struct Rule {
        int target;
        int quarter_turns;  // constant factor i^k
    };
    // Row r-1 of each table.
    static constexpr Rule kHalf[4] = {{2, 0}, {1, 2}, {4, 0}, {3, 0}};
    static constexpr Rule kHalfTau[4] = {{4, 1}, {3, 0}, {2, 0}, {1, 1}};
    static constexpr Rule kHalfTauOne[4] = {{3, 0}, {4, 3}, {1, 1}, {2, 0}};

    const Rule* table = kHalf;
    if (which == HalfPeriod::HalfTau)
        table = kHalfTau;
    else if (which == HalfPeriod::HalfTauOne)
        table = kHalfTauOne;

    ThetaTransformRecord rec;
    rec.index = r;
    for (int i = 0; i < 4; ++i)
        rec.index_map[i] = table[i].target;
    rec.new_u = u;
    rec.new_tau = tau;
    rec.log_multiplier = log_unit(table[r.value() - 1].quarter_turns);
    if (which != HalfPeriod::Half)
        rec.log_multiplier += -kI * kPi * (u + tau.value() / 4.0);
    return rec;
}

LogValue eval_reduced_scaled(ThetaIndex r, Complex u, const ModularParameter& tau,
                             const EvalSettings& settings)
{
    const auto [reduced_tau, word] = reduce_tau(tau);

    int idx = r.value();
    Complex arg = u;
    Complex t = tau.value();
    Complex log_mult{0.0, 0.0};
    for_each_run(
        word,
        [&](long run) {
            if (idx <= 2) {
                const long eighths = ((run % 8) + 8) % 8;
                log_mult += -static_cast<double>(eighths) * kI * kPi / 4.0;
            } else if (run % 2 != 0) {
                idx = 7 - idx;
            }
            t = translate(t, run);
        },
        [&] {
            const auto rec = apply_modular_step(ModularStep::S, idx, arg, ModularParameter{t});
            log_mult += rec.log_multiplier;
            idx = rec.target().value();
            arg = rec.new_u;
            t = rec.new_tau.value();
        });

    const ModularParameter final_tau{t};
    const auto [dec, shift] = reduce_u(idx, arg, final_tau);
    LogValue out = theta_scaled(idx, dec.u0, final_tau, settings);
    out.log_scale += log_mult + shift.log_multiplier;
    return out;
}

Complex eval_reduced(ThetaIndex r, Complex u, const ModularParameter& tau,
                     const EvalSettings& settings)
{
    return eval_reduced_scaled(r, u, tau, settings).value();
}

LogValue eval_dtheta1_reduced_scaled(const ModularParameter& tau, const EvalSettings& settings)
{
    const auto [reduced_tau, word] = reduce_tau(tau);
    Complex t = tau.value();
    Complex log_mult{0.0, 0.0};
    for_each_run(
        word,
        [&](long run) {
            const long eighths = ((run % 8) + 8) % 8;
            log_mult += -static_cast<double>(eighths) * kI * kPi / 4.0;
            t = translate(t, run);
        },
        [&] {
            // theta_1'(0|tau) = i (-i tau)^{-1/2} tau^{-1} theta_1'(0|-1/tau).
            log_mult += kI * kPi / 2.0 - 0.5 * std::log(-kI * t) - std::log(t);
            t = invert(t);
        });
    LogValue out = theta1_prime_zero_scaled(ModularParameter{t}, settings);
    out.log_scale += log_mult;
    return out;
}

std::vector<Complex> zeros_of(ThetaIndex r, const ModularParameter& tau, long n_min, long n_max,
                              long m_min, long m_max)
{
    double re_offset = 0.0;
    double tau_offset = 0.0;
    switch (r.value()) {
    case 1: break;
    case 2: re_offset = 0.5; break;
    case 3: re_offset = 0.5; tau_offset = 0.5; break;
    case 4: tau_offset = 0.5; break;
    }
    std::vector<Complex> out;
    for (long m = m_min; m <= m_max; ++m)
        for (long n = n_min; n <= n_max; ++n)
            out.push_back(static_cast<double>(n) + re_offset +
                          (static_cast<double>(m) + tau_offset) * tau.value());
    return out;
}

}  // namespace theta
