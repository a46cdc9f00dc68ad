#include "lifo/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <set>

namespace lifo {

namespace {

constexpr int kPanelW = 420;
constexpr int kPanelH = 300;
constexpr int kMarginL = 58;
constexpr int kMarginR = 14;
constexpr int kMarginT = 30;
constexpr int kMarginB = 42;
constexpr int kTitleH = 28;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Range {
  double lo = 0.0, hi = 1.0;
  double at(double v, double px_lo, double px_hi) const {
    return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
  }
};

Range data_range(const std::vector<Series>& series, bool y_axis) {
  bool any = false;
  double lo = 0.0, hi = 0.0;
  for (const Series& s : series)
    for (double v : y_axis ? s.y : s.x) {
      if (!any) {
        lo = hi = v;
        any = true;
      }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (!any) return {0.0, 1.0};
  if (y_axis && lo > 0.0 && lo < 0.25 * hi) lo = 0.0;  // anchor small minima at 0
  if (hi == lo) {
    lo -= 1.0;
    hi += 1.0;
  } else if (y_axis) {
    hi += 0.05 * (hi - lo);
  }
  return {lo, hi};
}

void render_panel(std::ostream& out, const Panel& panel, int ox, int oy) {
  const double x0 = ox + kMarginL, x1 = ox + kPanelW - kMarginR;
  const double y0 = oy + kPanelH - kMarginB, y1 = oy + kMarginT;  // y grows up
  const Range xr = data_range(panel.series, false);
  const Range yr = data_range(panel.series, true);

  out << "<text x=\"" << ox + kPanelW / 2 << "\" y=\"" << oy + 18
      << "\" text-anchor=\"middle\" font-size=\"13\" font-weight=\"bold\">"
      << esc(panel.title) << "</text>\n";

  // frame + ticks
  out << "<rect x=\"" << coord(x0) << "\" y=\"" << coord(y1) << "\" width=\""
      << coord(x1 - x0) << "\" height=\"" << coord(y0 - y1)
      << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = xr.lo + (xr.hi - xr.lo) * t / 4.0;
    const double px = xr.at(fx, x0, x1);
    out << "<line x1=\"" << coord(px) << "\" y1=\"" << coord(y0) << "\" x2=\""
        << coord(px) << "\" y2=\"" << coord(y0 + 4) << "\" stroke=\"#444\"/>\n"
        << "<text x=\"" << coord(px) << "\" y=\"" << coord(y0 + 16)
        << "\" text-anchor=\"middle\" font-size=\"10\">" << num(fx) << "</text>\n";
    const double fy = yr.lo + (yr.hi - yr.lo) * t / 4.0;
    const double py = yr.at(fy, y0, y1);
    out << "<line x1=\"" << coord(x0 - 4) << "\" y1=\"" << coord(py) << "\" x2=\""
        << coord(x0) << "\" y2=\"" << coord(py) << "\" stroke=\"#444\"/>\n"
        << "<text x=\"" << coord(x0 - 6) << "\" y=\"" << coord(py + 3)
        << "\" text-anchor=\"end\" font-size=\"10\">" << num(fy) << "</text>\n";
  }
  out << "<text x=\"" << coord((x0 + x1) / 2) << "\" y=\"" << coord(y0 + 32)
      << "\" text-anchor=\"middle\" font-size=\"11\">" << esc(panel.x_label)
      << "</text>\n";
  out << "<text x=\"" << ox + 14 << "\" y=\"" << coord((y0 + y1) / 2)
      << "\" text-anchor=\"middle\" font-size=\"11\" transform=\"rotate(-90 "
      << ox + 14 << ' ' << coord((y0 + y1) / 2) << ")\">" << esc(panel.y_label)
      << "</text>\n";

  for (size_t si = 0; si < panel.series.size(); ++si) {
    const Series& s = panel.series[si];
    const char* color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (size_t k = 0; k < s.x.size(); ++k) {
      if (k) out << ' ';
      out << coord(xr.at(s.x[k], x0, x1)) << ',' << coord(yr.at(s.y[k], y0, y1));
    }
    out << "\"/>\n";
    // legend entry, top-right corner of the plot area
    const double lx = x1 - 86, ly = y1 + 14 + 14 * static_cast<double>(si);
    out << "<line x1=\"" << coord(lx) << "\" y1=\"" << coord(ly - 3) << "\" x2=\""
        << coord(lx + 18) << "\" y2=\"" << coord(ly - 3) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n<text x=\"" << coord(lx + 22) << "\" y=\""
        << coord(ly) << "\" font-size=\"10\">" << esc(s.label) << "</text>\n";
  }
}

}  // namespace

void write_svg_panels(std::ostream& out, const std::string& title,
                      const std::vector<Panel>& panels) {
  const int cols = panels.size() > 1 ? 2 : 1;
  const int rows = (static_cast<int>(panels.size()) + cols - 1) / cols;
  const int width = cols * kPanelW;
  const int height = kTitleH + rows * kPanelH;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2
      << "\" y=\"19\" text-anchor=\"middle\" font-size=\"15\" font-weight=\"bold\">"
      << esc(title) << "</text>\n";
  for (size_t k = 0; k < panels.size(); ++k)
    render_panel(out, panels[k], static_cast<int>(k) % cols * kPanelW,
                 kTitleH + static_cast<int>(k) / cols * kPanelH);
  out << "</svg>\n";
}

std::vector<Panel> study_panels(const std::vector<AggregateRow>& aggregates,
                                Objective obj) {
  std::set<int> ns;
  for (const AggregateRow& a : aggregates)
    if (a.objective == obj) ns.insert(a.n);

  const std::string name = to_string(obj);
  std::string gap_unit = "gap";
  if (obj == Objective::Twct) gap_unit = "gap [%]";
  if (obj == Objective::Lmax) gap_unit = "gap / P(1,n)";
  if (obj == Objective::NumLate) gap_unit = "gap [late jobs]";
  if (obj == Objective::WeightedLate) gap_unit = "gap [weight]";

  std::vector<Panel> panels(4);
  panels[0] = {name + " - relative gap", "S", gap_unit, {}};
  panels[1] = {name + " - number of moves", "S", "moves", {}};
  panels[2] = {name + " - maximum stack utilization", "S", "max stack", {}};
  panels[3] = {name + " - average stack utilization", "S", "avg stack", {}};

  for (int n : ns) {
    Series gap{"n=" + std::to_string(n), {}, {}};
    Series moves = gap, mx = gap, avg = gap;
    for (const AggregateRow& a : aggregates) {
      if (a.objective != obj || a.n != n) continue;
      gap.x.push_back(a.s);
      gap.y.push_back(a.gap);
      moves.x.push_back(a.s);
      moves.y.push_back(a.moves);
      mx.x.push_back(a.s);
      mx.y.push_back(a.max_stack);
      avg.x.push_back(a.s);
      avg.y.push_back(a.avg_stack);
    }
    panels[0].series.push_back(std::move(gap));
    panels[1].series.push_back(std::move(moves));
    panels[2].series.push_back(std::move(mx));
    panels[3].series.push_back(std::move(avg));
  }
  return panels;
}

}  // namespace lifo
