#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "shock/spectrum.hpp"
#include "shock/ssi.hpp"

namespace shock {

/// One row of the modal table at the observation coordinate.
struct Mode {
    int mode_no = 0;
    double freq_hz = 0.0;
    double gamma = 0.0; ///< modal participation factor
    double phi = 0.0;   ///< mass-normalized mode shape value
    double m_eff_kg = 0.0;
    bool has_m_eff = false;

    double weight() const { return gamma * phi; }
};

/// Modal model parsed from `mode_no,freq_hz,gamma,phi[,m_eff_kg]`.
struct ModalModel {
    std::vector<Mode> modes;
};

/// Maximum-response estimates for one signal/model pair.
struct ResponseBounds {
    double actual_max = 0.0; ///< max |M x_signed|
    double abs_max = 0.0;    ///< max (N x)
    double ssi_bound = 0.0;  ///< v_SSI' x
    double srs_bound = 0.0;  ///< v_SRS' x
    bool left_bound_ok = false; ///< monitored: ssi_bound <= abs_max
};

ModalModel load_modal_model(const std::string& path);

/// Nonnegative weight vector on the oscillator grid. Each mode contributes
/// |gamma*phi|, split between the two bracketing grid points in proportion
/// to log-frequency distance; coincident modes accumulate. Throws RangeError
/// (naming the mode) when a modal frequency falls outside the grid.
Eigen::VectorXd weight_vector(const ModalModel& model, const std::vector<double>& grid);

/// Signed counterpart used for the actual-response superposition.
Eigen::VectorXd signed_weight_vector(const ModalModel& model,
                                     const std::vector<double>& grid);

/// Superposed acceleration history M x_signed and its maximum magnitude.
struct ActualResponse {
    Signal history;
    double actual_max = 0.0;
};

ActualResponse predict_actual(const ResponseMatrix& matrix, const ModalModel& model);

/// All four maximum-response estimates for the sandwich comparison.
ResponseBounds predict_bounds(const ResponseMatrix& matrix, const SrsVector& srs,
                              const SsiResult& ssi, const ModalModel& model);

/// Time histories N x and (sum of the first k SVD components) x, for
/// inspecting how much of the response the leading components carry.
struct ReconstructionCompare {
    Signal nx;
    Signal nkx;
    double alpha = 0.0;
};

ReconstructionCompare reconstruction_compare(const ResponseMatrix& matrix,
                                             const SvdDecomposition& decomp,
                                             const ModalModel& model, int k);

} // namespace shock
