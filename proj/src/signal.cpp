#include "shock/signal.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace shock {

namespace {

constexpr double kUniformJitterTol = 1e-6;

bool parse_double(const std::string& tok, double& out) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    errno = 0;
    out = std::strtod(begin, &end);
    if (end == begin || errno == ERANGE) return false;
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    return *end == '\0';
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == ';' || c == '\t' || c == ' ') {
            if (!cur.empty()) {
                fields.push_back(cur);
                cur.clear();
            } else if (c == ',' || c == ';') {
                fields.emplace_back();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string name = (slash == std::string::npos) ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return name;
}

} // namespace

void validate_signal(const Signal& s) {
    if (!(s.dt > 0.0))
        throw ParameterError("signal dt must be positive, got " + std::to_string(s.dt));
    if (s.samples.size() < 2)
        throw ParameterError("signal needs at least 2 samples, got " +
                             std::to_string(s.samples.size()));
    for (double v : s.samples)
        if (!std::isfinite(v))
            throw ParameterError("signal contains non-finite samples");
}

Signal load_signal(const std::string& path, SignalFormat format, double dt) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");

    std::vector<double> times;
    std::vector<double> accels;
    std::string line;
    std::size_t lineno = 0;
    bool header_allowed = true;

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;

        auto fields = split_fields(t);
        const bool two_col = (format == SignalFormat::csv_two_column);
        const std::size_t want = two_col ? 2 : 1;

        std::vector<double> vals(want);
        bool ok = fields.size() >= want;
        for (std::size_t k = 0; ok && k < want; ++k)
            ok = parse_double(fields[k], vals[k]);

        if (!ok) {
            // A single leading non-numeric line is treated as the header.
            if (header_allowed) {
                header_allowed = false;
                continue;
            }
            throw ParseError("non-numeric row at " + path + ":" + std::to_string(lineno));
        }
        header_allowed = false;
        if (two_col) times.push_back(vals[0]);
        accels.push_back(two_col ? vals[1] : vals[0]);
    }

    if (accels.empty()) throw EmptyInput("no data rows in '" + path + "'");
    if (accels.size() < 2)
        throw ParseError("'" + path + "' holds a single sample; need at least 2");

    Signal s;
    s.samples = std::move(accels);
    s.label = stem_of(path);

    if (format == SignalFormat::csv_two_column) {
        std::vector<double> steps(times.size() - 1);
        for (std::size_t i = 0; i + 1 < times.size(); ++i) {
            steps[i] = times[i + 1] - times[i];
            if (!(steps[i] > 0.0))
                throw SamplingError("time column not strictly increasing near row " +
                                    std::to_string(i + 1) + " of '" + path + "'");
        }
        std::nth_element(steps.begin(), steps.begin() + steps.size() / 2, steps.end());
        const double median = steps[steps.size() / 2];
        for (std::size_t i = 0; i + 1 < times.size(); ++i) {
            const double step = times[i + 1] - times[i];
            if (std::abs(step - median) > kUniformJitterTol * median)
                throw SamplingError("non-uniform sampling in '" + path + "': step " +
                                    std::to_string(step) + " vs median " +
                                    std::to_string(median));
        }
        s.dt = median;
    } else {
        if (!(dt > 0.0))
            throw ParameterError("single-column format requires dt > 0");
        s.dt = dt;
    }

    validate_signal(s);
    return s;
}

void save_signal(const Signal& signal, const std::string& path) {
    validate_signal(signal);
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");

    out << "time_s,accel_ms2\n";
    char buf[64];
    for (std::size_t i = 0; i < signal.samples.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n",
                      static_cast<double>(i) * signal.dt, signal.samples[i]);
        out << buf;
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

Signal gen_half_sine(double amplitude, double duration, double dt, double pad) {
    if (!(amplitude > 0.0)) throw ParameterError("half-sine amplitude must be positive");
    if (!(dt > 0.0)) throw ParameterError("half-sine dt must be positive");
    if (pad < 0.0) throw ParameterError("half-sine pad must be nonnegative");
    if (duration < 10.0 * dt)
        throw ResolutionError("half-sine duration " + std::to_string(duration) +
                              " shorter than 10*dt = " + std::to_string(10.0 * dt));

    const auto n_pulse = static_cast<std::size_t>(std::llround(duration / dt));
    const auto n_pad = static_cast<std::size_t>(std::llround(pad / dt));

    Signal s;
    s.dt = dt;
    s.label = "half_sine";
    s.samples.resize(n_pulse + 1 + n_pad, 0.0);
    for (std::size_t i = 0; i <= n_pulse; ++i) {
        const double t = static_cast<double>(i) * dt;
        s.samples[i] = amplitude * std::sin(std::numbers::pi * t / duration);
    }
    if (n_pulse % 2 == 0) s.samples[n_pulse / 2] = amplitude;
    return s;
}

Signal gen_damped_sine_sum(const std::vector<SineComponent>& components,
                           double duration, double dt) {
    if (!(dt > 0.0)) throw ParameterError("damped-sine dt must be positive");
    if (!(duration >= dt)) throw ParameterError("damped-sine duration too short");
    const double nyquist = 0.5 / dt;
    for (const auto& c : components) {
        if (!(c.freq_hz > 0.0)) throw ParameterError("component frequency must be positive");
        if (c.freq_hz >= nyquist)
            throw AliasError("component at " + std::to_string(c.freq_hz) +
                             " Hz is at or above Nyquist " + std::to_string(nyquist) + " Hz");
        if (c.decay < 0.0) throw ParameterError("component decay must be nonnegative");
    }

    const auto n = static_cast<std::size_t>(std::llround(duration / dt));
    Signal s;
    s.dt = dt;
    s.label = "damped_sine_sum";
    s.samples.assign(n + 1, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) * dt;
        double v = 0.0;
        for (const auto& c : components)
            v += c.amplitude * std::exp(-c.decay * t) *
                 std::sin(2.0 * std::numbers::pi * c.freq_hz * t + c.phase_rad);
        s.samples[i] = v;
    }
    return s;
}

} // namespace shock
