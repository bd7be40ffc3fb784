#include "shock/sdof.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace shock {

void validate_bank(const OscillatorBank& bank) {
    if (bank.freqs.empty()) throw ParameterError("oscillator bank is empty");
    if (!(bank.q > 0.5))
        throw ParameterError("bank q must exceed 0.5 (underdamped), got " +
                             std::to_string(bank.q));
    double prev = 0.0;
    for (double f : bank.freqs) {
        if (!(f > prev))
            throw ParameterError("bank frequencies must be positive and strictly increasing");
        prev = f;
    }
}

std::vector<double> log_freq_grid(double fmin, double fmax, int points_per_octave) {
    if (!(fmin > 0.0)) throw ParameterError("fmin must be positive");
    if (!(fmax >= fmin)) throw ParameterError("fmax must be >= fmin");
    if (points_per_octave < 1) throw ParameterError("points_per_octave must be >= 1");

    std::vector<double> freqs;
    for (int k = 0;; ++k) {
        const double f = fmin * std::exp2(static_cast<double>(k) / points_per_octave);
        if (f > fmax * (1.0 + 1e-12)) break;
        freqs.push_back(f);
    }
    if (freqs.empty() || freqs.back() < fmax * (1.0 - 1e-12)) freqs.push_back(fmax);
    return freqs;
}

OscillatorBank make_bank(double fmin, double fmax, int points_per_octave, double q) {
    OscillatorBank bank{log_freq_grid(fmin, fmax, points_per_octave), q};
    validate_bank(bank);
    return bank;
}

namespace {

void check_alias(const Signal& signal, double fn_hz) {
    const double limit = kNyquistGuard * signal.nyquist();
    if (!(fn_hz > 0.0)) throw ParameterError("natural frequency must be positive");
    if (fn_hz >= limit)
        throw AliasError("fn = " + std::to_string(fn_hz) + " Hz exceeds " +
                         std::to_string(limit) + " Hz (80% of Nyquist)");
}

void check_zeta(double zeta) {
    if (!(zeta > 0.0 && zeta < 1.0))
        throw ParameterError("zeta must lie in (0,1), got " + std::to_string(zeta));
}

} // namespace

Signal sdof_response_filter(const Signal& signal, double fn_hz, double zeta) {
    validate_signal(signal);
    check_alias(signal, fn_hz);
    check_zeta(zeta);

    // Ramp-invariant coefficients for the absolute-acceleration transfer
    // function of a base-excited SDOF oscillator.
    const double wn = 2.0 * std::numbers::pi * fn_hz;
    const double wd = wn * std::sqrt(1.0 - zeta * zeta);
    const double dt = signal.dt;
    const double E = std::exp(-zeta * wn * dt);
    const double K = wd * dt;
    const double C = E * std::cos(K);
    const double S = E * std::sin(K);
    const double Sp = S / K;

    const double b0 = 1.0 - Sp;
    const double b1 = 2.0 * (Sp - C);
    const double b2 = E * E - Sp;
    const double a1 = -2.0 * C;
    const double a2 = E * E;

    Signal out;
    out.dt = dt;
    out.label = signal.label;
    out.samples.resize(signal.samples.size());

    double x1 = 0.0, x2 = 0.0; // previous inputs
    double y1 = 0.0, y2 = 0.0; // previous outputs
    for (std::size_t i = 0; i < signal.samples.size(); ++i) {
        const double x0 = signal.samples[i];
        const double y0 = b0 * x0 + b1 * x1 + b2 * x2 - a1 * y1 - a2 * y2;
        out.samples[i] = y0;
        x2 = x1;
        x1 = x0;
        y2 = y1;
        y1 = y0;
    }
    return out;
}

Signal sdof_response_oracle(const Signal& signal, double fn_hz, double zeta,
                            int substeps) {
    validate_signal(signal);
    check_alias(signal, fn_hz);
    check_zeta(zeta);
    if (substeps < 4) throw ParameterError("oracle needs at least 4 substeps per sample");

    const double wn = 2.0 * std::numbers::pi * fn_hz;
    const double wn2 = wn * wn;
    const double c = 2.0 * zeta * wn;

    // State (z, v): relative displacement and velocity of the mass.
    //   z' = v
    //   v' = -a_base(t) - c*v - wn^2*z
    // Absolute acceleration = -(c*v + wn^2*z).
    Signal out;
    out.dt = signal.dt;
    out.label = signal.label;
    out.samples.resize(signal.samples.size());
    out.samples[0] = 0.0;

    const double h = signal.dt / substeps;
    double z = 0.0, v = 0.0;

    for (std::size_t i = 0; i + 1 < signal.samples.size(); ++i) {
        const double a0 = signal.samples[i];
        const double slope = (signal.samples[i + 1] - a0) / signal.dt;
        for (int s = 0; s < substeps; ++s) {
            const double t0 = s * h;
            auto base = [&](double tau) { return a0 + slope * tau; };
            auto fz = [](double vv) { return vv; };
            auto fv = [&](double zz, double vv, double tau) {
                return -base(tau) - c * vv - wn2 * zz;
            };

            const double k1z = fz(v);
            const double k1v = fv(z, v, t0);
            const double k2z = fz(v + 0.5 * h * k1v);
            const double k2v = fv(z + 0.5 * h * k1z, v + 0.5 * h * k1v, t0 + 0.5 * h);
            const double k3z = fz(v + 0.5 * h * k2v);
            const double k3v = fv(z + 0.5 * h * k2z, v + 0.5 * h * k2v, t0 + 0.5 * h);
            const double k4z = fz(v + h * k3v);
            const double k4v = fv(z + h * k3z, v + h * k3v, t0 + h);

            z += h / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
            v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        }
        out.samples[i + 1] = -(c * v + wn2 * z);
    }
    return out;
}

} // namespace shock
