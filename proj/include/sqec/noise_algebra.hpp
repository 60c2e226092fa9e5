#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sqec/error_mask.hpp"

namespace sqec {

// Per-qubit, per-channel-pass error rates: o environmental (sensor
// detectable), p entangling (invisible to the sensors).
struct ErrorProbabilities {
    double o = 0.0;
    double p = 0.0;

    double obar() const { return 1.0 - o; }
    double pbar() const { return 1.0 - p; }
    // Weight of an environmental+entangling pair on one qubit, which cancels
    // under the pure bit-flip model.
    double cbar() const { return o * p; }
    // Probability that at least one error of either type hits a qubit.
    double phat() const { return o + p - o * p; }
};

inline ErrorProbabilities make_error_probabilities(double o, double p) {
    if (!(o >= 0.0 && o <= 1.0)) throw std::domain_error("o must be in [0, 1]");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must be in [0, 1]");
    return ErrorProbabilities{o, p};
}

// Inverts phat = o + p - o*p for the environmental rate.
inline double solve_environmental(double phat, double p) {
    if (!(phat >= 0.0 && phat < 1.0)) throw std::domain_error("phat must be in [0, 1)");
    if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("p must be in [0, 1)");
    if (p > phat)
        throw std::domain_error("p exceeds phat: environmental rate would be negative");
    return (phat - p) / (1.0 - p);
}

namespace detail {
inline double int_pow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}
}  // namespace detail

// o^a p^b obar^(3-a) pbar^(3-b) with a, b the per-type error counts of the mask.
inline double case_probability(ErrorMask mask, const ErrorProbabilities& probs) {
    require_mask3(mask.env, "env mask");
    require_mask3(mask.ent, "ent mask");
    const int a = popcount3(mask.env);
    const int b = popcount3(mask.ent);
    return detail::int_pow(probs.o, a) * detail::int_pow(probs.p, b) *
           detail::int_pow(probs.obar(), 3 - a) * detail::int_pow(probs.pbar(), 3 - b);
}

// Joint weights of the standard-vs-assisted outcome pairs. Field names read
// <standard letter>_<assisted disposition>; the seven fields partition unity.
struct OutcomeFractions {
    double correct_correct = 0.0;       // C vs C
    double cancel_cancel = 0.0;         // CC vs CC
    double faulty_faulty = 0.0;         // F vs F
    double cancel_parity_reject = 0.0;  // CC vs R_PT
    double faulty_parity_reject = 0.0;  // F vs R_PT
    double cancel_sensor_reject = 0.0;  // CC vs R_S
    double faulty_sensor_reject = 0.0;  // F vs R_S

    double sum() const {
        return correct_correct + cancel_cancel + faulty_faulty + cancel_parity_reject +
               faulty_parity_reject + cancel_sensor_reject + faulty_sensor_reject;
    }
};

// Closed-form joint weights, grouped by powers of (1-o). The same-qubit
// cancellation weight c = o*p is substituted wherever both error types land
// on one qubit.
inline OutcomeFractions outcome_fractions(const ErrorProbabilities& probs) {
    const double o = probs.o, p = probs.p;
    const double ob = probs.obar(), pb = probs.pbar(), c = probs.cbar();
    const double o2 = o * o, o3 = o2 * o;
    const double p2 = p * p, p3 = p2 * p;
    const double ob2 = ob * ob, ob3 = ob2 * ob;
    const double pb2 = pb * pb, pb3 = pb2 * pb;
    const double c2 = c * c, c3 = c2 * c;

    OutcomeFractions f;
    f.correct_correct = ob3 * (3 * p * pb2 + pb3) + ob2 * (3 * o * pb3);
    f.cancel_cancel = ob2 * (3 * c * pb2);
    f.faulty_faulty = ob3 * (p3 + 3 * p2 * pb) + ob2 * (3 * p2 * c + 3 * o * p2 * pb);
    f.cancel_parity_reject = ob2 * (6 * p * c * pb);
    f.faulty_parity_reject = ob2 * (6 * o * p * pb2);
    f.cancel_sensor_reject =
        ob * (3 * p * c2 + 3 * c2 * pb + 6 * o * c * pb2) + c3 + 3 * o * c2 * pb;
    f.faulty_sensor_reject =
        ob * (6 * o * p * c * pb + 3 * o2 * p * pb2 + 3 * o2 * pb3) + 3 * o2 * c * pb2 +
        o3 * pb3;
    return f;
}

struct StandardAggregate {
    double correct = 0.0;
    double cancel = 0.0;
    double faulty = 0.0;
};

struct AssistedAggregate {
    double correct = 0.0;
    double cancel = 0.0;
    double faulty = 0.0;
    double parity_reject = 0.0;
    double sensor_reject = 0.0;
};

// The standard code never rejects, so every assisted reject column folds back
// into its standard outcome letter.
inline StandardAggregate standard_aggregate(const OutcomeFractions& f) {
    return {f.correct_correct,
            f.cancel_cancel + f.cancel_parity_reject + f.cancel_sensor_reject,
            f.faulty_faulty + f.faulty_parity_reject + f.faulty_sensor_reject};
}

inline AssistedAggregate assisted_aggregate(const OutcomeFractions& f) {
    return {f.correct_correct, f.cancel_cancel, f.faulty_faulty,
            f.cancel_parity_reject + f.faulty_parity_reject,
            f.cancel_sensor_reject + f.faulty_sensor_reject};
}

enum class CodeMode { Standard, Assisted };

// (C + CC) / (C + CC + F) over the cases a mode keeps.
inline double effective_correct(const OutcomeFractions& f, CodeMode mode) {
    double correct, cancel, faulty;
    if (mode == CodeMode::Standard) {
        const StandardAggregate a = standard_aggregate(f);
        correct = a.correct;
        cancel = a.cancel;
        faulty = a.faulty;
    } else {
        correct = f.correct_correct;
        cancel = f.cancel_cancel;
        faulty = f.faulty_faulty;
    }
    const double kept = correct + cancel + faulty;
    if (kept <= 0.0) throw std::domain_error("effective_correct: every case rejected");
    return (correct + cancel) / kept;
}

// Unrejected faults as a fraction of unrejected cases under the assisted code.
inline double effective_fault(const OutcomeFractions& f) {
    const double kept = f.faulty_faulty + f.correct_correct + f.cancel_cancel;
    if (kept <= 0.0) throw std::domain_error("effective_fault: every case rejected");
    return f.faulty_faulty / kept;
}

// Standard-code counterpart; nothing is rejected, so the denominator is unity.
inline double effective_fault_standard(const OutcomeFractions& f) {
    const StandardAggregate a = standard_aggregate(f);
    return a.faulty / (a.correct + a.cancel + a.faulty);
}

struct SweepCell {
    double phat = 0.0;
    double entangling_fraction = 0.0;
    double eff_fault_standard = 0.0;
    double eff_fault_assisted = 0.0;
    bool valid = true;
};

// steps x steps grid over total error rate and entangling share p/phat,
// row-major with phat as the slow axis. Domain failures flag the cell rather
// than aborting the sweep.
inline std::vector<SweepCell> sweep_grid(double phat_min, double phat_max, double frac_min,
                                         double frac_max, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep_grid: steps must be >= 2");
    if (!(phat_min >= 0.0 && phat_min <= phat_max && phat_max < 1.0))
        throw std::domain_error("sweep_grid: phat range must satisfy 0 <= min <= max < 1");
    if (!(frac_min >= 0.0 && frac_min <= frac_max && frac_max <= 1.0))
        throw std::domain_error("sweep_grid: fraction range must satisfy 0 <= min <= max <= 1");

    std::vector<SweepCell> cells;
    cells.reserve(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double phat = phat_min + (phat_max - phat_min) * i / (steps - 1);
        for (int j = 0; j < steps; ++j) {
            const double frac = frac_min + (frac_max - frac_min) * j / (steps - 1);
            SweepCell cell;
            cell.phat = phat;
            cell.entangling_fraction = frac;
            try {
                const double p = frac * phat;
                const double o = solve_environmental(phat, p);
                const OutcomeFractions f = outcome_fractions(make_error_probabilities(o, p));
                cell.eff_fault_standard = effective_fault_standard(f);
                cell.eff_fault_assisted = effective_fault(f);
            } catch (const std::domain_error&) {
                cell.valid = false;
                cell.eff_fault_standard = std::numeric_limits<double>::quiet_NaN();
                cell.eff_fault_assisted = std::numeric_limits<double>::quiet_NaN();
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace sqec
