#include "shock/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

#include "shock/svg.hpp"

namespace shock {

ResponseMatrix build_response_matrix(const Signal& signal, const OscillatorBank& bank) {
    validate_signal(signal);
    validate_bank(bank);

    const double limit = kNyquistGuard * signal.nyquist();
    for (double f : bank.freqs)
        if (f >= limit)
            throw AliasError("bank frequency " + std::to_string(f) + " Hz exceeds " +
                             std::to_string(limit) + " Hz (80% of Nyquist)");

    const auto m = static_cast<Eigen::Index>(signal.samples.size());
    const auto n = static_cast<Eigen::Index>(bank.freqs.size());

    ResponseMatrix rm;
    rm.m_signed.resize(m, n);
    rm.n_abs.resize(m, n);
    rm.freqs = bank.freqs;
    rm.q = bank.q;
    rm.label = signal.label;
    rm.times.resize(signal.samples.size());
    for (std::size_t i = 0; i < signal.samples.size(); ++i)
        rm.times[i] = signal.time_at(i);

    const double zeta = bank.zeta();
    auto run_columns = [&](Eigen::Index j0, Eigen::Index j1) {
        for (Eigen::Index j = j0; j < j1; ++j) {
            Signal resp = sdof_response_filter(signal, bank.freqs[j], zeta);
            for (Eigen::Index i = 0; i < m; ++i) {
                const double v = resp.samples[static_cast<std::size_t>(i)];
                rm.m_signed(i, j) = v;
                rm.n_abs(i, j) = std::abs(v);
            }
        }
    };

    const auto hw = static_cast<Eigen::Index>(
        std::max(1u, std::thread::hardware_concurrency()));
    const Eigen::Index nthreads = std::min(hw, n);
    if (nthreads <= 1) {
        run_columns(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        const Eigen::Index chunk = (n + nthreads - 1) / nthreads;
        for (Eigen::Index t = 0; t < nthreads; ++t) {
            const Eigen::Index j0 = t * chunk;
            const Eigen::Index j1 = std::min(n, j0 + chunk);
            if (j0 >= j1) break;
            pool.emplace_back(run_columns, j0, j1);
        }
        for (auto& th : pool) th.join();
    }
    return rm;
}

SrsVector srs(const ResponseMatrix& matrix) {
    SrsVector out;
    out.freqs = matrix.freqs;
    out.values.resize(static_cast<std::size_t>(matrix.cols()));
    for (Eigen::Index j = 0; j < matrix.cols(); ++j)
        out.values[static_cast<std::size_t>(j)] = matrix.n_abs.col(j).maxCoeff();
    return out;
}

void export_src(const ResponseMatrix& matrix, double floor_ms2, double ceiling_ms2,
                const std::string& csv_path, const std::string& svg_path) {
    if (!(floor_ms2 > 0.0 && floor_ms2 < ceiling_ms2))
        throw ParameterError("SRC clamp range requires 0 < floor < ceiling");

    std::ofstream csv(csv_path);
    if (!csv) throw IoError("cannot open '" + csv_path + "' for writing");
    csv << "time_s,freq_hz,abs_accel_ms2\n";
    char buf[96];
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n",
                          matrix.times[static_cast<std::size_t>(i)],
                          matrix.freqs[static_cast<std::size_t>(j)], matrix.n_abs(i, j));
            csv << buf;
        }
    }
    if (!csv) throw IoError("write failed for '" + csv_path + "'");

    write_src_svg(matrix, floor_ms2, ceiling_ms2, svg_path);
}

} // namespace shock
