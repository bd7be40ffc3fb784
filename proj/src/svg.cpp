#include "shock/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace shock {

namespace {

constexpr int kWidth = 900;
constexpr int kHeight = 540;
constexpr int kMarginL = 70;
constexpr int kMarginR = 80;
constexpr int kMarginT = 30;
constexpr int kMarginB = 50;
constexpr int kPlotW = kWidth - kMarginL - kMarginR;
constexpr int kPlotH = kHeight - kMarginT - kMarginB;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// 256-step ramp through dark blue, cyan, yellow, red.
std::string ramp_color(int step) {
    static const double anchors[4][3] = {
        {0.05, 0.03, 0.35}, {0.0, 0.75, 0.85}, {0.98, 0.91, 0.22}, {0.78, 0.08, 0.10}};
    const double s = std::clamp(step, 0, 255) / 255.0 * 3.0;
    const int seg = std::min(2, static_cast<int>(s));
    const double t = s - seg;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(255.0 * (anchors[seg][0] * (1 - t) + anchors[seg + 1][0] * t)),
                  static_cast<int>(255.0 * (anchors[seg][1] * (1 - t) + anchors[seg + 1][1] * t)),
                  static_cast<int>(255.0 * (anchors[seg][2] * (1 - t) + anchors[seg + 1][2] * t)));
    return buf;
}

void open_svg(std::ofstream& out, const std::string& path) {
    out.open(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void close_svg(std::ofstream& out, const std::string& path) {
    out << "</svg>\n";
    if (!out) throw IoError("write failed for '" + path + "'");
}

void text(std::ofstream& out, double x, double y, const std::string& s,
          const std::string& anchor = "middle", double size = 12,
          const std::string& extra = "") {
    out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-size=\"" << size
        << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor << "\"" << extra
        << ">" << s << "</text>\n";
}

void line(std::ofstream& out, double x1, double y1, double x2, double y2,
          const std::string& stroke, double width = 1.0, const std::string& dash = "") {
    out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
        << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
        << width << "\"";
    if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
    out << "/>\n";
}

// Decade tick positions covering [lo, hi] in log10 space.
std::vector<double> decade_ticks(double lo, double hi) {
    std::vector<double> ticks;
    for (int e = static_cast<int>(std::floor(std::log10(lo)));
         e <= static_cast<int>(std::ceil(std::log10(hi))); ++e) {
        const double v = std::pow(10.0, e);
        if (v >= lo * (1 - 1e-9) && v <= hi * (1 + 1e-9)) ticks.push_back(v);
    }
    return ticks;
}

std::string sci_label(double v) {
    const int e = static_cast<int>(std::llround(std::log10(v)));
    if (e >= -2 && e <= 3) return fmt(v);
    return "1e" + std::to_string(e);
}

} // namespace

void write_src_svg(const ResponseMatrix& matrix, double floor_ms2, double ceiling_ms2,
                   const std::string& path) {
    const auto m = matrix.rows();
    const auto n = matrix.cols();
    const double t0 = matrix.times.front();
    const double t1 = matrix.times.back();
    const double lf0 = std::log10(matrix.freqs.front());
    const double lf1 = std::log10(matrix.freqs.back());
    const double lv0 = std::log10(floor_ms2);
    const double lv1 = std::log10(ceiling_ms2);

    // Cap the rendered time resolution; each bin keeps its maximum so severe
    // responses survive the aggregation. The CSV keeps full resolution.
    const Eigen::Index bins = std::min<Eigen::Index>(m, 1200);

    std::ofstream out;
    open_svg(out, path);

    auto x_of = [&](double bin_center) {
        return kMarginL + bin_center / static_cast<double>(bins) * kPlotW;
    };
    // Frequency cells: geometric midpoints between neighbors.
    auto y_of_logf = [&](double lf) {
        return kMarginT + kPlotH - (lf - lf0) / std::max(lf1 - lf0, 1e-30) * kPlotH;
    };

    for (Eigen::Index j = 0; j < n; ++j) {
        const double lf = std::log10(matrix.freqs[static_cast<std::size_t>(j)]);
        const double lf_lo =
            j == 0 ? lf : 0.5 * (lf + std::log10(matrix.freqs[static_cast<std::size_t>(j - 1)]));
        const double lf_hi =
            j == n - 1 ? lf : 0.5 * (lf + std::log10(matrix.freqs[static_cast<std::size_t>(j + 1)]));
        const double y_top = n == 1 ? kMarginT : y_of_logf(lf_hi);
        const double y_bot = n == 1 ? kMarginT + kPlotH : y_of_logf(lf_lo);

        for (Eigen::Index b = 0; b < bins; ++b) {
            const Eigen::Index i0 = b * m / bins;
            const Eigen::Index i1 = std::max(i0 + 1, (b + 1) * m / bins);
            double v = 0.0;
            for (Eigen::Index i = i0; i < i1; ++i) v = std::max(v, matrix.n_abs(i, j));
            const double clamped = std::clamp(v, floor_ms2, ceiling_ms2);
            const int step = static_cast<int>(std::floor(
                (std::log10(clamped) - lv0) / (lv1 - lv0) * 255.999));
            out << "<rect x=\"" << fmt(x_of(static_cast<double>(b))) << "\" y=\""
                << fmt(y_top) << "\" width=\""
                << fmt(x_of(static_cast<double>(b + 1)) - x_of(static_cast<double>(b)) + 0.5)
                << "\" height=\"" << fmt(y_bot - y_top + 0.5) << "\" fill=\""
                << ramp_color(step) << "\"/>\n";
        }
    }

    // Axes.
    line(out, kMarginL, kMarginT + kPlotH, kMarginL + kPlotW, kMarginT + kPlotH, "black");
    line(out, kMarginL, kMarginT, kMarginL, kMarginT + kPlotH, "black");
    for (int k = 0; k <= 5; ++k) {
        const double t = t0 + (t1 - t0) * k / 5.0;
        const double x = kMarginL + static_cast<double>(k) / 5.0 * kPlotW;
        line(out, x, kMarginT + kPlotH, x, kMarginT + kPlotH + 5, "black");
        text(out, x, kMarginT + kPlotH + 20, fmt(t));
    }
    for (double f : decade_ticks(matrix.freqs.front(), matrix.freqs.back())) {
        const double y = y_of_logf(std::log10(f));
        line(out, kMarginL - 5, y, kMarginL, y, "black");
        text(out, kMarginL - 8, y + 4, sci_label(f), "end");
    }
    text(out, kMarginL + kPlotW / 2.0, kHeight - 12, "t (s)");
    text(out, 18, kMarginT + kPlotH / 2.0, "f (Hz)", "middle", 12,
         " transform=\"rotate(-90 18 " + fmt(kMarginT + kPlotH / 2.0) + ")\"");

    // Color bar.
    const double bar_x = kWidth - kMarginR + 20;
    for (int s = 0; s < 256; ++s) {
        const double y = kMarginT + kPlotH - (s + 1) / 256.0 * kPlotH;
        out << "<rect x=\"" << fmt(bar_x) << "\" y=\"" << fmt(y)
            << "\" width=\"14\" height=\"" << fmt(kPlotH / 256.0 + 0.5) << "\" fill=\""
            << ramp_color(s) << "\"/>\n";
    }
    text(out, bar_x + 18, kMarginT + kPlotH + 4, sci_label(floor_ms2), "start", 10);
    text(out, bar_x + 18, kMarginT + 10, sci_label(ceiling_ms2), "start", 10);
    text(out, bar_x + 7, kMarginT - 8, "m/s2", "middle", 10);

    close_svg(out, path);
}

namespace {

void polyline(std::ofstream& out, const std::vector<std::pair<double, double>>& pts,
              const std::string& stroke, double width, const std::string& dash = "") {
    if (pts.empty()) return;
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
        << "\"";
    if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
    out << " points=\"";
    for (const auto& [x, y] : pts) out << fmt(x) << "," << fmt(y) << " ";
    out << "\"/>\n";
}

} // namespace

void write_dual_svg(const DualSpectra& dual, const std::string& path) {
    const double lf0 = std::log10(dual.freqs.front());
    const double lf1 = std::log10(dual.freqs.back());

    double vmax = 0.0;
    double vmin = std::numeric_limits<double>::max();
    for (std::size_t j = 0; j < dual.freqs.size(); ++j) {
        vmax = std::max({vmax, dual.srs[j], dual.ssi[j]});
        for (double v : {dual.srs[j], dual.ssi[j]})
            if (v > 0.0) vmin = std::min(vmin, v);
    }
    if (!(vmax > 0.0)) vmax = 1.0;
    vmin = std::max(vmin, vmax * 1e-6);
    const double lv0 = std::floor(std::log10(vmin));
    const double lv1 = std::ceil(std::log10(vmax));

    double db_max = 1.0;
    for (std::size_t j = 0; j < dual.margin_db.size(); ++j)
        if (!dual.underflow[j]) db_max = std::max(db_max, dual.margin_db[j]);
    db_max = std::ceil(db_max / 3.0) * 3.0;

    auto x_of = [&](double f) {
        return kMarginL + (std::log10(f) - lf0) / std::max(lf1 - lf0, 1e-30) * kPlotW;
    };
    auto y_of = [&](double v) {
        const double lv = std::log10(std::clamp(v, std::pow(10.0, lv0), std::pow(10.0, lv1)));
        return kMarginT + kPlotH - (lv - lv0) / (lv1 - lv0) * kPlotH;
    };
    auto y_of_db = [&](double db) {
        return kMarginT + kPlotH - std::clamp(db, 0.0, db_max) / db_max * kPlotH;
    };

    std::ofstream out;
    open_svg(out, path);

    for (double f : decade_ticks(dual.freqs.front(), dual.freqs.back())) {
        line(out, x_of(f), kMarginT, x_of(f), kMarginT + kPlotH, "#dddddd");
        line(out, x_of(f), kMarginT + kPlotH, x_of(f), kMarginT + kPlotH + 5, "black");
        text(out, x_of(f), kMarginT + kPlotH + 20, sci_label(f));
    }
    for (int e = static_cast<int>(lv0); e <= static_cast<int>(lv1); ++e) {
        const double v = std::pow(10.0, e);
        line(out, kMarginL, y_of(v), kMarginL + kPlotW, y_of(v), "#eeeeee");
        text(out, kMarginL - 8, y_of(v) + 4, "1e" + std::to_string(e), "end");
    }
    for (double db = 0.0; db <= db_max + 1e-9; db += db_max / 4.0)
        text(out, kMarginL + kPlotW + 8, y_of_db(db) + 4, fmt(db), "start");

    std::vector<std::pair<double, double>> srs_pts, ssi_pts, margin_pts;
    for (std::size_t j = 0; j < dual.freqs.size(); ++j) {
        srs_pts.emplace_back(x_of(dual.freqs[j]), y_of(dual.srs[j]));
        if (dual.ssi[j] > 0.0) ssi_pts.emplace_back(x_of(dual.freqs[j]), y_of(dual.ssi[j]));
        if (!dual.underflow[j])
            margin_pts.emplace_back(x_of(dual.freqs[j]), y_of_db(dual.margin_db[j]));
    }
    polyline(out, srs_pts, "#b2182b", 1.8);
    polyline(out, ssi_pts, "#2166ac", 1.8);
    polyline(out, margin_pts, "#4d4d4d", 1.4, "6 4");

    line(out, kMarginL, kMarginT + kPlotH, kMarginL + kPlotW, kMarginT + kPlotH, "black");
    line(out, kMarginL, kMarginT, kMarginL, kMarginT + kPlotH, "black");
    line(out, kMarginL + kPlotW, kMarginT, kMarginL + kPlotW, kMarginT + kPlotH, "black");

    text(out, kMarginL + kPlotW / 2.0, kHeight - 12, "f (Hz)");
    text(out, 18, kMarginT + kPlotH / 2.0, "accel (m/s2)", "middle", 12,
         " transform=\"rotate(-90 18 " + fmt(kMarginT + kPlotH / 2.0) + ")\"");
    text(out, kWidth - 16, kMarginT + kPlotH / 2.0, "margin (dB)", "middle", 12,
         " transform=\"rotate(90 " + fmt(kWidth - 16) + " " + fmt(kMarginT + kPlotH / 2.0) +
             ")\"");
    text(out, kMarginL + 50, kMarginT + 16, "SRS", "start", 12, " fill=\"#b2182b\"");
    text(out, kMarginL + 100, kMarginT + 16, "SSI", "start", 12, " fill=\"#2166ac\"");
    text(out, kMarginL + 150, kMarginT + 16, "margin", "start", 12, " fill=\"#4d4d4d\"");

    close_svg(out, path);
}

void write_spectrum_svg(const std::vector<double>& freqs,
                        const std::vector<double>& values, const std::string& name,
                        const std::string& path) {
    const double lf0 = std::log10(freqs.front());
    const double lf1 = std::log10(freqs.back());

    double vmax = 0.0;
    double vmin = std::numeric_limits<double>::max();
    for (double v : values) {
        vmax = std::max(vmax, v);
        if (v > 0.0) vmin = std::min(vmin, v);
    }
    if (!(vmax > 0.0)) vmax = 1.0;
    vmin = std::max(std::min(vmin, vmax), vmax * 1e-6);
    const double lv0 = std::floor(std::log10(vmin));
    const double lv1 = std::ceil(std::log10(vmax));

    auto x_of = [&](double f) {
        return kMarginL + (std::log10(f) - lf0) / std::max(lf1 - lf0, 1e-30) * kPlotW;
    };
    auto y_of = [&](double v) {
        const double lv = std::log10(std::clamp(v, std::pow(10.0, lv0), std::pow(10.0, lv1)));
        return kMarginT + kPlotH - (lv - lv0) / std::max(lv1 - lv0, 1e-30) * kPlotH;
    };

    std::ofstream out;
    open_svg(out, path);

    for (double f : decade_ticks(freqs.front(), freqs.back())) {
        line(out, x_of(f), kMarginT, x_of(f), kMarginT + kPlotH, "#dddddd");
        line(out, x_of(f), kMarginT + kPlotH, x_of(f), kMarginT + kPlotH + 5, "black");
        text(out, x_of(f), kMarginT + kPlotH + 20, sci_label(f));
    }
    for (int e = static_cast<int>(lv0); e <= static_cast<int>(lv1); ++e) {
        const double v = std::pow(10.0, e);
        line(out, kMarginL, y_of(v), kMarginL + kPlotW, y_of(v), "#eeeeee");
        text(out, kMarginL - 8, y_of(v) + 4, "1e" + std::to_string(e), "end");
    }

    std::vector<std::pair<double, double>> pts;
    for (std::size_t j = 0; j < freqs.size(); ++j)
        if (values[j] > 0.0) pts.emplace_back(x_of(freqs[j]), y_of(values[j]));
    polyline(out, pts, "#b2182b", 1.8);

    line(out, kMarginL, kMarginT + kPlotH, kMarginL + kPlotW, kMarginT + kPlotH, "black");
    line(out, kMarginL, kMarginT, kMarginL, kMarginT + kPlotH, "black");
    text(out, kMarginL + kPlotW / 2.0, kHeight - 12, "f (Hz)");
    text(out, 18, kMarginT + kPlotH / 2.0, "accel (m/s2)", "middle", 12,
         " transform=\"rotate(-90 18 " + fmt(kMarginT + kPlotH / 2.0) + ")\"");
    text(out, kMarginL + 50, kMarginT + 16, name, "start", 12, " fill=\"#b2182b\"");

    close_svg(out, path);
}

} // namespace shock
