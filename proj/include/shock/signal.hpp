#pragma once

#include <string>
#include <vector>

#include "shock/errors.hpp"

namespace shock {

/// Conversion factor between g and m/s².
inline constexpr double kStandardGravity = 9.80665;

/// Uniformly sampled acceleration-time history.
///
/// Invariants: dt > 0, at least two samples, all samples finite.
struct Signal {
    std::vector<double> samples; ///< acceleration, m/s²
    double dt = 0.0;             ///< sample interval, s
    std::string label;

    std::size_t size() const { return samples.size(); }
    double duration() const { return dt * static_cast<double>(samples.size() - 1); }
    double nyquist() const { return 0.5 / dt; }
    double time_at(std::size_t i) const { return static_cast<double>(i) * dt; }
};

/// Validates the Signal invariants, throwing ParameterError on violation.
void validate_signal(const Signal& s);

enum class SignalFormat {
    csv_two_column,       ///< time_s,accel_ms2 rows; dt inferred from the time column
    csv_single_column,    ///< one acceleration per row; dt supplied by the caller
};

/// Reads an acceleration history from a text file.
///
/// Two-column files must have a strictly increasing, uniformly spaced time
/// column (relative jitter below 1e-6); dt is taken as the median time step.
/// Lines beginning with '#' and an optional header line are skipped.
/// `dt` is only consulted for the single-column format.
Signal load_signal(const std::string& path, SignalFormat format, double dt = 0.0);

/// Writes `time_s,accel_ms2` rows with 17 significant digits so that samples
/// survive a save/load round trip bit-exactly.
void save_signal(const Signal& signal, const std::string& path);

/// Half-sine pulse of the given amplitude and duration followed by `pad`
/// seconds of zeros. When duration/dt is even the peak sample equals the
/// amplitude exactly.
Signal gen_half_sine(double amplitude, double duration, double dt, double pad);

/// One exponentially decaying sinusoid component.
struct SineComponent {
    double freq_hz;
    double amplitude;  ///< m/s²
    double decay;      ///< 1/s
    double phase_rad;
};

/// Sum of exponentially decaying sinusoids sampled at dt over `duration`.
Signal gen_damped_sine_sum(const std::vector<SineComponent>& components,
                           double duration, double dt);

} // namespace shock
