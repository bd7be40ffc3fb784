#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "shock/sdof.hpp"
#include "shock/signal.hpp"

namespace shock {

/// Shock response matrix: per-oscillator acceleration histories in columns.
///
/// m_signed holds the signed responses (rows = time, cols = frequency) and
/// n_abs the element-wise magnitudes. Standard inputs have m >> n.
struct ResponseMatrix {
    Eigen::MatrixXd m_signed;
    Eigen::MatrixXd n_abs;
    std::vector<double> times; ///< s, length m
    std::vector<double> freqs; ///< Hz, length n
    double q = 10.0;
    std::string label;

    Eigen::Index rows() const { return m_signed.rows(); }
    Eigen::Index cols() const { return m_signed.cols(); }
    double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
};

/// Maximax spectrum: per-frequency maximum of the magnitude responses.
struct SrsVector {
    std::vector<double> values; ///< m/s², length n
    std::vector<double> freqs;  ///< Hz
};

/// Runs the oscillator bank over the signal and assembles both matrices.
/// Columns are computed independently and in parallel; the result does not
/// depend on scheduling.
ResponseMatrix build_response_matrix(const Signal& signal, const OscillatorBank& bank);

/// Column maxima of n_abs.
SrsVector srs(const ResponseMatrix& matrix);

/// Display clamp defaults for the shock response contour.
inline constexpr double kSrcFloorDefault = 240.0;      // m/s²
inline constexpr double kSrcCeilingDefault = 200000.0; // m/s²

/// Writes the long-format CSV `time_s,freq_hz,abs_accel_ms2` (unclamped,
/// exactly m*n rows) and an SVG contour of n_abs with log10 frequency axis
/// and a 256-step log10 color ramp clamped to [floor, ceiling].
void export_src(const ResponseMatrix& matrix, double floor_ms2, double ceiling_ms2,
                const std::string& csv_path, const std::string& svg_path);

} // namespace shock
