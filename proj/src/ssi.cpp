#include "shock/ssi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace shock {

namespace {

// Flip (u_k, v_k) pairs so every v_k has nonnegative sum; a zero sum is
// resolved by the sign of the first nonzero entry of v_k.
void canonicalize_signs(std::vector<Eigen::VectorXd>& us,
                        std::vector<Eigen::VectorXd>& vs) {
    for (std::size_t k = 0; k < vs.size(); ++k) {
        const double s = vs[k].sum();
        bool flip = s < 0.0;
        if (s == 0.0) {
            for (Eigen::Index i = 0; i < vs[k].size(); ++i) {
                if (vs[k][i] != 0.0) {
                    flip = vs[k][i] < 0.0;
                    break;
                }
            }
        }
        if (flip) {
            vs[k] = -vs[k];
            us[k] = -us[k];
        }
    }
}

SvdDecomposition assemble(const Eigen::MatrixXd& U, const Eigen::VectorXd& sv,
                          const Eigen::MatrixXd& V, double tol,
                          const std::vector<double>& freqs) {
    const double sigma1 = sv.size() > 0 ? sv[0] : 0.0;
    if (!(sigma1 > 0.0)) throw DegenerateInput("response matrix is numerically zero");

    SvdDecomposition d;
    d.freqs = freqs;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv[k] <= tol * sigma1) break;
        d.sigma.push_back(sv[k]);
        d.u_vectors.emplace_back(U.col(k));
        d.v_vectors.emplace_back(V.col(k));
    }
    d.rank = static_cast<int>(d.sigma.size());
    canonicalize_signs(d.u_vectors, d.v_vectors);
    return d;
}

} // namespace

double SvdDecomposition::energy() const {
    double e = 0.0;
    for (double s : sigma) e += s * s;
    return e;
}

SvdDecomposition svd_nonneg(const ResponseMatrix& matrix, double tol) {
    const Eigen::MatrixXd& N = matrix.n_abs;
    if (N.size() == 0) throw DegenerateInput("response matrix is empty");
    if (!(N.cwiseAbs().maxCoeff() > 0.0))
        throw DegenerateInput("response matrix is all zero");
    if (!(tol >= 0.0 && tol < 1.0)) throw ParameterError("svd tol must lie in [0,1)");

    const Eigen::Index m = N.rows();
    const Eigen::Index n = N.cols();

    if (n > m) {
        // Short-fat case: direct Jacobi SVD.
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(N, Eigen::ComputeThinU | Eigen::ComputeThinV);
        return assemble(svd.matrixU(), svd.singularValues(), svd.matrixV(), tol,
                        matrix.freqs);
    }

    // Gram route: eigenvectors of N'N give the frequency-domain basis without
    // touching the long time dimension more than O(m n^2).
    const Eigen::MatrixXd gram = N.transpose() * N;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    if (eig.info() != Eigen::Success)
        throw DegenerateInput("Gram eigendecomposition failed to converge");

    // Eigenvalues arrive ascending; reverse to descending singular order.
    Eigen::MatrixXd V0(n, n);
    for (Eigen::Index k = 0; k < n; ++k) V0.col(k) = eig.eigenvectors().col(n - 1 - k);

    // Left vectors recovered from B = N*V0 lose orthogonality when the
    // spectrum spans many decades, so restore it with a thin QR of B and a
    // small SVD of its triangular factor. Same O(m n^2) cost, and the
    // reconstruction stays exact because V0 is orthogonal.
    const Eigen::MatrixXd B = N * V0;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(B);
    const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(m, n);
    const Eigen::MatrixXd R = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();

    Eigen::JacobiSVD<Eigen::MatrixXd> small(R, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::MatrixXd U = Q * small.matrixU();
    const Eigen::MatrixXd V = V0 * small.matrixV();

    return assemble(U, small.singularValues(), V, tol, matrix.freqs);
}

SsiResult ssi_extract(const SvdDecomposition& decomp) {
    if (decomp.rank < 1) throw DegenerateInput("decomposition has rank zero");

    const Eigen::VectorXd& u1 = decomp.u_vectors[0];
    const Eigen::VectorXd& v1 = decomp.v_vectors[0];
    const double sigma1 = decomp.sigma[0];
    const double u1_max = u1.cwiseAbs().maxCoeff();

    SsiResult r;
    r.sigma = decomp.sigma;
    r.freqs = decomp.freqs;
    r.alpha = 1.0 - sigma1 * sigma1 / decomp.energy();

    r.v_ssi.resize(static_cast<std::size_t>(v1.size()));
    for (Eigen::Index j = 0; j < v1.size(); ++j)
        r.v_ssi[static_cast<std::size_t>(j)] = sigma1 * u1_max * v1[j];

    r.u_ssi.resize(static_cast<std::size_t>(u1.size()));
    for (Eigen::Index i = 0; i < u1.size(); ++i)
        r.u_ssi[static_cast<std::size_t>(i)] = u1[i] / u1_max;

    return r;
}

DualSpectra dual_spectra(const SrsVector& srs, const SsiResult& ssi) {
    if (srs.freqs.size() != ssi.freqs.size())
        throw GridError("SRS and SSI grids differ in length: " +
                        std::to_string(srs.freqs.size()) + " vs " +
                        std::to_string(ssi.freqs.size()));
    for (std::size_t j = 0; j < srs.freqs.size(); ++j)
        if (srs.freqs[j] != ssi.freqs[j])
            throw GridError("SRS and SSI grids differ at index " + std::to_string(j));

    const double srs_max = *std::max_element(srs.values.begin(), srs.values.end());
    const double floor = kMarginUnderflowRel * srs_max;

    DualSpectra d;
    d.freqs = srs.freqs;
    d.srs = srs.values;
    d.ssi = ssi.v_ssi;
    d.margin_db.resize(srs.values.size());
    d.underflow.resize(srs.values.size());
    for (std::size_t j = 0; j < srs.values.size(); ++j) {
        if (ssi.v_ssi[j] <= floor) {
            d.margin_db[j] = std::numeric_limits<double>::infinity();
            d.underflow[j] = true;
        } else {
            d.margin_db[j] = 20.0 * std::log10(srs.values[j] / ssi.v_ssi[j]);
            d.underflow[j] = false;
        }
    }
    return d;
}

TrendBound trend_bound_check(const ResponseMatrix& matrix,
                             const SvdDecomposition& decomp,
                             const Eigen::VectorXd& x) {
    if (x.size() != matrix.cols())
        throw ParameterError("weight vector length does not match matrix columns");
    if ((x.array() < 0.0).any())
        throw ParameterError("weight vector must be nonnegative");
    if (decomp.rank < 1) throw DegenerateInput("decomposition has rank zero");

    const double sigma1 = decomp.sigma[0];
    const double sigma2 = decomp.rank >= 2 ? decomp.sigma[1] : 0.0;
    const Eigen::VectorXd nx = matrix.n_abs * x;
    const Eigen::VectorXd trend =
        (sigma1 * decomp.v_vectors[0].dot(x)) * decomp.u_vectors[0];

    TrendBound tb;
    tb.lhs = (nx - trend).norm();
    tb.rhs = sigma2 * x.norm();
    // Absolute floor covers roundoff when the matrix is (numerically) rank
    // one and the theorem's right side is exactly zero.
    const double noise = 1e-10 * sigma1 * x.norm();
    tb.holds = tb.lhs <= tb.rhs * (1.0 + 1e-9) + noise;
    return tb;
}

void export_dual_csv(const DualSpectra& dual, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << "freq_hz,srs_ms2,ssi_ms2,margin_db\n";
    char buf[128];
    for (std::size_t j = 0; j < dual.freqs.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", dual.freqs[j],
                      dual.srs[j], dual.ssi[j], dual.margin_db[j]);
        out << buf;
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace shock
