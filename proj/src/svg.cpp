#include "cgdlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cgdlab::cli {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#e377c2",
                          "#7f7f7f", "#bcbd22"};
constexpr int kPaletteSize = 10;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Bounds {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
};

Bounds data_bounds(const std::vector<Series>& series) {
  Bounds b;
  bool first = true;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (first) {
        b.xmin = b.xmax = x;
        b.ymin = b.ymax = y;
        first = false;
      } else {
        b.xmin = std::min(b.xmin, x);
        b.xmax = std::max(b.xmax, x);
        b.ymin = std::min(b.ymin, y);
        b.ymax = std::max(b.ymax, y);
      }
    }
  }
  if (first) throw std::runtime_error("plot: no finite data points");
  if (b.xmax == b.xmin) {
    b.xmin -= 0.5;
    b.xmax += 0.5;
  }
  if (b.ymax == b.ymin) {
    b.ymin -= 0.5;
    b.ymax += 0.5;
  }
  return b;
}

// Round tick spacing to 1/2/5 x 10^k.
double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(target_ticks, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  double step = 10.0;
  if (r <= 1.0)
    step = 1.0;
  else if (r <= 2.0)
    step = 2.0;
  else if (r <= 5.0)
    step = 5.0;
  return step * mag;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_plot(const std::vector<Series>& series,
                        const PlotOptions& options) {
  if (series.empty()) throw std::runtime_error("plot: no series");
  const Bounds b = data_bounds(series);

  const double ml = 70.0, mr = 20.0, mt = 40.0, mb = 55.0;
  const double pw = options.width - ml - mr;
  const double ph = options.height - mt - mb;
  auto sx = [&](double x) { return ml + (x - b.xmin) / (b.xmax - b.xmin) * pw; };
  auto sy = [&](double y) {
    return mt + ph - (y - b.ymin) / (b.ymax - b.ymin) * ph;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 "
      << options.width << " " << options.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << options.width / 2 << "\" y=\"22\" font-size=\"15\" "
         "text-anchor=\"middle\" font-family=\"sans-serif\">"
      << xml_escape(options.title) << "</text>\n";

  // Axes frame.
  svg << "<rect x=\"" << fmt(ml) << "\" y=\"" << fmt(mt) << "\" width=\""
      << fmt(pw) << "\" height=\"" << fmt(ph)
      << "\" fill=\"none\" stroke=\"#333\"/>\n";

  const double xstep = nice_step(b.xmax - b.xmin, 6);
  for (double t = std::ceil(b.xmin / xstep) * xstep; t <= b.xmax + 1e-12;
       t += xstep) {
    const double px = sx(t);
    svg << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(mt + ph) << "\" x2=\""
        << fmt(px) << "\" y2=\"" << fmt(mt + ph + 5)
        << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(mt + ph + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\">"
        << fmt(t) << "</text>\n";
  }
  const double ystep = nice_step(b.ymax - b.ymin, 6);
  for (double t = std::ceil(b.ymin / ystep) * ystep; t <= b.ymax + 1e-12;
       t += ystep) {
    const double py = sy(t);
    svg << "<line x1=\"" << fmt(ml - 5) << "\" y1=\"" << fmt(py) << "\" x2=\""
        << fmt(ml) << "\" y2=\"" << fmt(py) << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << fmt(ml - 8) << "\" y=\"" << fmt(py + 4)
        << "\" font-size=\"11\" text-anchor=\"end\" "
           "font-family=\"sans-serif\">"
        << fmt(t) << "</text>\n";
  }

  svg << "<text x=\"" << options.width / 2 << "\" y=\""
      << options.height - 12
      << "\" font-size=\"13\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\">"
      << xml_escape(options.x_label) << "</text>\n";
  svg << "<text x=\"18\" y=\"" << mt + ph / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" transform=\"rotate(-90 18 "
      << fmt(mt + ph / 2) << ")\">" << xml_escape(options.y_label)
      << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    if (options.scatter) {
      for (const auto& [x, y] : series[i].points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        svg << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y))
            << "\" r=\"1.8\" fill=\"" << color << "\" fill-opacity=\"0.6\"/>\n";
      }
    } else {
      svg << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.6\" points=\"";
      bool first = true;
      for (const auto& [x, y] : series[i].points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        if (!first) svg << ' ';
        svg << fmt(sx(x)) << ',' << fmt(sy(y));
        first = false;
      }
      svg << "\"/>\n";
    }
  }

  // Legend, top-right inside the frame.
  double ly = mt + 14;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    const double lx = ml + pw - 150;
    svg << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
        << fmt(lx + 22) << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << color
        << "\" stroke-width=\"2.2\"/>\n";
    svg << "<text x=\"" << fmt(lx + 28) << "\" y=\"" << fmt(ly)
        << "\" font-size=\"12\" font-family=\"sans-serif\">"
        << xml_escape(series[i].label) << "</text>\n";
    ly += 16;
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cgdlab::cli
