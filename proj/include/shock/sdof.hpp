#pragma once

#include <vector>

#include "shock/signal.hpp"

namespace shock {

/// Log-spaced bank of underdamped SDOF oscillators sharing one Q factor.
struct OscillatorBank {
    std::vector<double> freqs; ///< natural frequencies, Hz, strictly increasing
    double q = 10.0;           ///< quality factor, Q = 1/(2*zeta)

    double zeta() const { return 0.5 / q; }
};

/// Validates bank invariants (positive increasing freqs, q > 0.5).
void validate_bank(const OscillatorBank& bank);

/// Makes a bank over a log grid with the given quality factor.
OscillatorBank make_bank(double fmin, double fmax, int points_per_octave, double q);

/// Geometric frequency grid fmin*2^(k/ppo), truncated at fmax with fmax
/// appended when not hit exactly. fmin == fmax yields the singleton grid.
std::vector<double> log_freq_grid(double fmin, double fmax, int points_per_octave);

/// Fraction of Nyquist above which the recursive filter is refused.
inline constexpr double kNyquistGuard = 0.8;

/// Absolute-acceleration response of one base-excited SDOF oscillator,
/// computed with the ramp-invariant second-order recursive filter.
/// Rest initial conditions. Output has the same length and dt as the input.
Signal sdof_response_filter(const Signal& signal, double fn_hz, double zeta);

/// Same response integrated by fixed-step RK4 on the relative-coordinate
/// equation, with linear interpolation of the base acceleration between
/// samples. Slow but independent of the filter derivation; used as the
/// verification oracle.
Signal sdof_response_oracle(const Signal& signal, double fn_hz, double zeta,
                            int substeps = 8);

} // namespace shock
