#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "shock/spectrum.hpp"

namespace shock {

/// Thin SVD of the magnitude response matrix with near-null directions
/// dropped and signs canonicalized (each frequency vector has nonnegative
/// sum; ties resolved by the first nonzero entry).
struct SvdDecomposition {
    std::vector<double> sigma;            ///< singular values, descending
    std::vector<Eigen::VectorXd> u_vectors; ///< time-domain, unit 2-norm
    std::vector<Eigen::VectorXd> v_vectors; ///< frequency-domain, unit 2-norm
    int rank = 0;
    std::vector<double> freqs; ///< Hz axis carried through from the matrix

    /// Sum of squared kept singular values.
    double energy() const;
};

/// Relative threshold below which singular values count as rank deficiency.
inline constexpr double kSvdDropTolDefault = 1e-12;

/// First singular triplet mapped onto the severity spectra.
struct SsiResult {
    std::vector<double> v_ssi; ///< m/s², length n: sigma1*max|u1|*v1
    std::vector<double> u_ssi; ///< dimensionless, length m, max-norm 1
    double alpha = 0.0;        ///< 1 - sigma1^2 / sum(sigma_k^2), in [0,1)
    std::vector<double> sigma; ///< full kept singular value list
    std::vector<double> freqs; ///< Hz
};

/// Supremum/infimum pair with the per-frequency dB margin.
struct DualSpectra {
    std::vector<double> freqs;     ///< Hz
    std::vector<double> srs;       ///< m/s²
    std::vector<double> ssi;       ///< m/s²
    std::vector<double> margin_db; ///< 20*log10(srs/ssi); +inf where flagged
    std::vector<bool> underflow;   ///< true where ssi fell below the floor
};

/// Thin SVD of n_abs via eigendecomposition of the n x n Gram matrix
/// (the usual m >> n case), with the left block re-orthonormalized through
/// a thin QR plus small SVD so the orthonormality and reconstruction
/// invariants hold on ill-conditioned inputs too. Falls back to Jacobi SVD
/// when n > m. Singular values at or below tol*sigma1 are dropped.
SvdDecomposition svd_nonneg(const ResponseMatrix& matrix,
                            double tol = kSvdDropTolDefault);

/// Extracts v_SSI, u_SSI and alpha from the leading triplet. The v_SSI
/// spectrum equals the column maxima of the best rank-one approximation.
SsiResult ssi_extract(const SvdDecomposition& decomp);

/// Ratio floor under which the margin is reported as +inf and flagged,
/// relative to the SRS peak.
inline constexpr double kMarginUnderflowRel = 1e-12;

/// Combines the two spectra into the dual-spectra/margin representation.
/// Throws GridError when the frequency grids differ.
DualSpectra dual_spectra(const SrsVector& srs, const SsiResult& ssi);

/// Residual of the rank-one trend approximation of N*x against its
/// operator-norm bound sigma2*||x||.
struct TrendBound {
    double lhs = 0.0; ///< ||N x - (sigma1 v1'x) u1||_2
    double rhs = 0.0; ///< sigma2 * ||x||_2 (zero when rank == 1)
    bool holds = false;
};

/// Checks the rank-one trend bound for a nonnegative weight vector.
TrendBound trend_bound_check(const ResponseMatrix& matrix,
                             const SvdDecomposition& decomp,
                             const Eigen::VectorXd& x);

/// Writes `freq_hz,srs_ms2,ssi_ms2,margin_db` rows.
void export_dual_csv(const DualSpectra& dual, const std::string& path);

} // namespace shock
