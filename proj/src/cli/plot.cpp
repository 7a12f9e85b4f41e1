#include "jostlab/cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "jostlab/cli/output.hpp"
#include "jostlab/errors.hpp"

namespace jostlab::cli {

namespace {

constexpr double kWidth = 720, kHeight = 450;
constexpr double kLeft = 80, kRight = 30, kTop = 40, kBottom = 60;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

//! Roughly five round ticks covering [lo, hi].
std::vector<double> ticks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  std::vector<double> out;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step)
    out.push_back(std::abs(t) < 1e-9 * span ? 0.0 : t);
  return out;
}

class Canvas {
 public:
  Canvas(double x0, double x1, double y0, double y1) : x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
    if (x1_ <= x0_) x1_ = x0_ + 1.0;
    if (y1_ <= y0_) y1_ = y0_ + 1.0;
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"450\" viewBox=\"0 0 720 450\" "
            "font-family=\"sans-serif\" font-size=\"12\">\n";
    out_ += "<rect width=\"720\" height=\"450\" fill=\"white\"/>\n";
  }

  double X(double x) const { return kLeft + (x - x0_) / (x1_ - x0_) * (kWidth - kLeft - kRight); }
  double Y(double y) const { return kHeight - kBottom - (y - y0_) / (y1_ - y0_) * (kHeight - kTop - kBottom); }

  void axes(const std::string& xlabel, const std::string& ylabel, bool log_y) {
    const double xa = kLeft, xb = kWidth - kRight, ya = kHeight - kBottom, yb = kTop;
    out_ += "<rect x=\"" + fmt("%.2f", xa) + "\" y=\"" + fmt("%.2f", yb) + "\" width=\"" + fmt("%.2f", xb - xa) +
            "\" height=\"" + fmt("%.2f", ya - yb) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : ticks(x0_, x1_)) {
      const double x = X(t);
      line(x, ya, x, ya + 5, "black", "");
      text(x, ya + 18, fmt("%g", t), "middle");
    }
    for (double t : ticks(y0_, y1_)) {
      const double y = Y(t);
      line(xa - 5, y, xa, y, "black", "");
      line(xa, y, xb, y, "#dddddd", "");
      text(xa - 8, y + 4, log_y ? "1e" + fmt("%g", t) : fmt("%g", t), "end");
    }
    text((xa + xb) / 2, kHeight - 18, xlabel, "middle");
    out_ += "<text x=\"18\" y=\"" + fmt("%.2f", (ya + yb) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
            fmt("%.2f", (ya + yb) / 2) + ")\">" + escape(ylabel) + "</text>\n";
  }

  void line(double xa, double ya, double xb, double yb, const std::string& color, const std::string& dash) {
    out_ += "<line x1=\"" + fmt("%.2f", xa) + "\" y1=\"" + fmt("%.2f", ya) + "\" x2=\"" + fmt("%.2f", xb) +
            "\" y2=\"" + fmt("%.2f", yb) + "\" stroke=\"" + color + "\"" +
            (dash.empty() ? "" : " stroke-dasharray=\"" + dash + "\"") + "/>\n";
  }

  void text(double x, double y, const std::string& s, const char* anchor) {
    out_ += "<text x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", y) + "\" text-anchor=\"" + anchor + "\">" +
            escape(s) + "</text>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color, const std::string& dash) {
    if (pts.empty()) return;
    out_ += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"" +
            (dash.empty() ? "" : " stroke-dasharray=\"" + dash + "\"") + " points=\"";
    for (const auto& [x, y] : pts) out_ += fmt("%.2f", X(x)) + "," + fmt("%.2f", Y(y)) + " ";
    out_ += "\"/>\n";
  }

  void dots(const std::vector<std::pair<double, double>>& pts, const std::string& color) {
    for (const auto& [x, y] : pts)
      out_ += "<circle cx=\"" + fmt("%.2f", X(x)) + "\" cy=\"" + fmt("%.2f", Y(y)) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
  }

  void legend(const std::vector<std::pair<std::string, std::string>>& entries) {
    double y = kTop + 16;
    for (const auto& [color, label] : entries) {
      line(kLeft + 12, y - 4, kLeft + 32, y - 4, color, "");
      text(kLeft + 38, y, label, "start");
      y += 16;
    }
  }

  void title(const std::string& s) { text(kWidth / 2, 24, s, "middle"); }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  double x0_, x1_, y0_, y1_;
  std::string out_;
};

std::string describe(const GrowthFit& g) {
  if (g.model == GrowthModel::PowerBgs)
    return "fit log M = c + kappa x^b: kappa = " + fmt("%.4g", g.coefficient) + ", b = " + fmt("%.4g", g.exponent) +
           ", beta = " + fmt("%.4g", g.beta) + ", residual = " + fmt("%.2g", g.residual);
  return "fit log M = c + A x + ...: A = " + fmt("%.4g", g.coefficient) + ", residual = " + fmt("%.2g", g.residual);
}

}  // namespace

std::string render_svg(const ArcScanReport& report, const std::optional<GrowthFit>& fit) {
  if (report.radii.empty()) throw PreconditionError("cannot plot an empty scan report");
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < report.radii.size(); ++i)
    pts.emplace_back(report.radii[i], std::log10(std::max(report.max_modulus[i], 1e-300)));

  // The predictor is proportional to R on a fixed set of arc angles.
  std::vector<std::pair<double, double>> curve;
  if (fit && report.radii.size() >= 2 && report.predictor[0] > 0.0) {
    const double slope = report.predictor[0] / report.radii[0];
    const double r0 = report.radii[1], r1 = report.radii.back();
    for (int i = 0; i <= 200; ++i) {
      const double R = r0 + (r1 - r0) * i / 200.0;
      const double y = fit->predict_log(slope * R) / std::log(10.0);
      if (std::isfinite(y)) curve.emplace_back(R, y);
    }
  }

  double ylo = INFINITY, yhi = -INFINITY;
  for (const auto& v : {pts, curve})
    for (const auto& [x, y] : v) {
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  const double pad = 0.05 * std::max(yhi - ylo, 1.0);
  Canvas c(0.0, report.radii.back() * 1.05, std::floor(ylo - pad), std::ceil(yhi + pad));
  c.title(std::string("arc scan: ") + to_string(report.verdict));
  c.axes("radius R", "max |fhat| on the arc (log scale)", true);
  c.polyline(curve, "#d62728", "");
  c.dots(pts, "#1f77b4");
  std::vector<std::pair<std::string, std::string>> legend{{"#1f77b4", "max modulus"}};
  if (fit) legend.emplace_back("#d62728", describe(*fit));
  c.legend(legend);
  return c.finish();
}

std::string render_svg(const TimeSignal& signal, const std::vector<cplx>& oracle) {
  if (signal.t_grid.empty()) throw PreconditionError("cannot plot an empty time signal");
  std::vector<std::pair<double, double>> pts, ref;
  double ymax = 0.0;
  for (std::size_t i = 0; i < signal.t_grid.size(); ++i) {
    pts.emplace_back(signal.t_grid[i], std::abs(signal.values[i]));
    ymax = std::max(ymax, std::abs(signal.values[i]));
    if (i < oracle.size() && std::isfinite(std::abs(oracle[i]))) {
      ref.emplace_back(signal.t_grid[i], std::abs(oracle[i]));
      ymax = std::max(ymax, std::abs(oracle[i]));
    }
  }
  const double t0 = std::min(0.0, signal.t_grid.front()), t1 = std::max(0.0, signal.t_grid.back());
  const double pad = 0.05 * std::max(t1 - t0, 1.0);
  Canvas c(t0 - pad, t1 + pad, 0.0, ymax > 0.0 ? 1.1 * ymax : 1.0);
  c.title("time signal");
  c.axes("t", "|phi(t)|", false);
  c.line(c.X(0.0), kTop, c.X(0.0), kHeight - kBottom, "#7f7f7f", "4,3");
  c.text(c.X(0.0) + 4, kTop + 12, "t = 0", "start");
  c.polyline(ref, "#d62728", "6,4");
  c.polyline(pts, "#1f77b4", "");
  c.dots(pts, "#1f77b4");
  std::vector<std::pair<std::string, std::string>> legend{{"#1f77b4", "|phi(t)|, quadrature"}};
  if (!ref.empty()) legend.emplace_back("#d62728", "|phi(t)|, residue oracle");
  c.legend(legend);
  return c.finish();
}

void emit_plot(const ArcScanReport& report, const std::optional<GrowthFit>& fit, const std::filesystem::path& path) {
  write_file(path, render_svg(report, fit));
}

void emit_plot(const TimeSignal& signal, const std::vector<cplx>& oracle, const std::filesystem::path& path) {
  write_file(path, render_svg(signal, oracle));
}

}  // namespace jostlab::cli
