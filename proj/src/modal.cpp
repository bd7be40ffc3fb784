#include "shock/modal.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>

namespace shock {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

bool parse_double(const std::string& tok, double& v) {
    if (tok.empty()) return false;
    char* end = nullptr;
    errno = 0;
    v = std::strtod(tok.c_str(), &end);
    return end != tok.c_str() && *end == '\0' && errno != ERANGE;
}

// Bracketing grid slots and the log-distance split for one frequency.
struct GridSplit {
    std::size_t lo;
    std::size_t hi;
    double t; // weight on hi
};

GridSplit locate(double f, const std::vector<double>& grid, int mode_no) {
    constexpr double rel = 1e-12;
    if (f < grid.front() * (1.0 - rel) || f > grid.back() * (1.0 + rel))
        throw RangeError("mode " + std::to_string(mode_no) + " at " + std::to_string(f) +
                         " Hz lies outside the grid [" + std::to_string(grid.front()) +
                         ", " + std::to_string(grid.back()) + "] Hz");

    auto it = std::lower_bound(grid.begin(), grid.end(), f);
    if (it != grid.end() && std::abs(*it - f) <= rel * f)
        return {static_cast<std::size_t>(it - grid.begin()),
                static_cast<std::size_t>(it - grid.begin()), 0.0};
    if (it == grid.begin()) return {0, 0, 0.0};
    if (it == grid.end()) return {grid.size() - 1, grid.size() - 1, 0.0};

    const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
    const std::size_t lo = hi - 1;
    const double t = (std::log(f) - std::log(grid[lo])) /
                     (std::log(grid[hi]) - std::log(grid[lo]));
    return {lo, hi, t};
}

Eigen::VectorXd build_weights(const ModalModel& model, const std::vector<double>& grid,
                              bool signed_weights) {
    if (grid.size() < 1) throw ParameterError("empty frequency grid");
    Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(grid.size()));
    for (const Mode& m : model.modes) {
        const double w = signed_weights ? m.weight() : std::abs(m.weight());
        const GridSplit gs = locate(m.freq_hz, grid, m.mode_no);
        x[static_cast<Eigen::Index>(gs.lo)] += (1.0 - gs.t) * w;
        if (gs.hi != gs.lo) x[static_cast<Eigen::Index>(gs.hi)] += gs.t * w;
    }
    return x;
}

} // namespace

ModalModel load_modal_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");

    ModalModel model;
    std::string line;
    std::size_t lineno = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;

        auto fields = split_csv(t);
        if (fields.size() < 4)
            throw ParseError("modal row needs mode_no,freq_hz,gamma,phi at " + path + ":" +
                             std::to_string(lineno));

        double vals[5] = {0, 0, 0, 0, 0};
        bool ok = true;
        const std::size_t ncols = std::min<std::size_t>(fields.size(), 5);
        for (std::size_t k = 0; k < ncols && ok; ++k) ok = parse_double(fields[k], vals[k]);

        if (!ok) {
            if (header_allowed) {
                header_allowed = false;
                continue;
            }
            throw ParseError("non-numeric modal row at " + path + ":" +
                             std::to_string(lineno));
        }
        header_allowed = false;

        Mode m;
        m.mode_no = static_cast<int>(std::llround(vals[0]));
        m.freq_hz = vals[1];
        m.gamma = vals[2];
        m.phi = vals[3];
        if (fields.size() >= 5) {
            m.m_eff_kg = vals[4];
            m.has_m_eff = true;
        }
        if (!(m.freq_hz > 0.0) || !std::isfinite(m.gamma) || !std::isfinite(m.phi))
            throw ParseError("invalid modal values at " + path + ":" +
                             std::to_string(lineno));
        model.modes.push_back(m);
    }
    if (model.modes.empty()) throw ParseError("no modal rows in '" + path + "'");
    return model;
}

Eigen::VectorXd weight_vector(const ModalModel& model, const std::vector<double>& grid) {
    return build_weights(model, grid, false);
}

Eigen::VectorXd signed_weight_vector(const ModalModel& model,
                                     const std::vector<double>& grid) {
    return build_weights(model, grid, true);
}

ActualResponse predict_actual(const ResponseMatrix& matrix, const ModalModel& model) {
    const Eigen::VectorXd xs = signed_weight_vector(model, matrix.freqs);
    const Eigen::VectorXd a = matrix.m_signed * xs;

    ActualResponse r;
    r.history.dt = matrix.dt();
    r.history.label = matrix.label + "_superposed";
    r.history.samples.assign(a.data(), a.data() + a.size());
    r.actual_max = a.size() > 0 ? a.cwiseAbs().maxCoeff() : 0.0;
    return r;
}

ResponseBounds predict_bounds(const ResponseMatrix& matrix, const SrsVector& srs,
                              const SsiResult& ssi, const ModalModel& model) {
    if (srs.freqs != matrix.freqs || ssi.freqs != matrix.freqs)
        throw GridError("spectra were computed on a different grid than the matrix");

    const Eigen::VectorXd x = weight_vector(model, matrix.freqs);
    const Eigen::VectorXd nx = matrix.n_abs * x;

    ResponseBounds b;
    b.actual_max = predict_actual(matrix, model).actual_max;
    b.abs_max = nx.size() > 0 ? nx.maxCoeff() : 0.0;
    b.ssi_bound = 0.0;
    b.srs_bound = 0.0;
    for (std::size_t j = 0; j < srs.values.size(); ++j) {
        b.ssi_bound += ssi.v_ssi[j] * x[static_cast<Eigen::Index>(j)];
        b.srs_bound += srs.values[j] * x[static_cast<Eigen::Index>(j)];
    }
    b.left_bound_ok = b.ssi_bound <= b.abs_max * (1.0 + 1e-9);
    return b;
}

ReconstructionCompare reconstruction_compare(const ResponseMatrix& matrix,
                                             const SvdDecomposition& decomp,
                                             const ModalModel& model, int k) {
    if (k < 1 || k > decomp.rank)
        throw ParameterError("reconstruction order k = " + std::to_string(k) +
                             " outside [1, " + std::to_string(decomp.rank) + "]");

    const Eigen::VectorXd x = weight_vector(model, matrix.freqs);
    const Eigen::VectorXd nx = matrix.n_abs * x;

    Eigen::VectorXd nkx = Eigen::VectorXd::Zero(matrix.rows());
    for (int i = 0; i < k; ++i)
        nkx += (decomp.sigma[static_cast<std::size_t>(i)] *
                decomp.v_vectors[static_cast<std::size_t>(i)].dot(x)) *
               decomp.u_vectors[static_cast<std::size_t>(i)];

    ReconstructionCompare rc;
    rc.alpha = 1.0 - decomp.sigma[0] * decomp.sigma[0] / decomp.energy();
    rc.nx.dt = matrix.dt();
    rc.nx.label = matrix.label + "_nx";
    rc.nx.samples.assign(nx.data(), nx.data() + nx.size());
    rc.nkx.dt = matrix.dt();
    rc.nkx.label = matrix.label + "_n" + std::to_string(k) + "x";
    rc.nkx.samples.assign(nkx.data(), nkx.data() + nkx.size());
    return rc;
}

} // namespace shock
