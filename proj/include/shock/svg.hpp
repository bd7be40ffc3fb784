#pragma once

#include <string>

#include "shock/spectrum.hpp"
#include "shock/ssi.hpp"

namespace shock {

/// Shock response contour of n_abs: time on x, log10 frequency on y,
/// 256-step log10 color ramp clamped to [floor, ceiling].
void write_src_svg(const ResponseMatrix& matrix, double floor_ms2, double ceiling_ms2,
                   const std::string& path);

/// Log-log overlay of SRS and SSI with the dB margin (dashed) on a
/// right-hand axis.
void write_dual_svg(const DualSpectra& dual, const std::string& path);

/// Simple log-x overlay of a single spectrum, for the srs/ssi commands.
void write_spectrum_svg(const std::vector<double>& freqs,
                        const std::vector<double>& values, const std::string& name,
                        const std::string& path);

} // namespace shock
