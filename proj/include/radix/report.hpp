#pragma once

// Depth-sweep tabulation: CSV emission and a small self-contained SVG line
// plot of the lower bounds against the limit.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "radix/errors.hpp"
#include "radix/numeric.hpp"
#include "radix/radical.hpp"

namespace radix {

struct sweep_row {
  std::int64_t depth = 0;
  std::string lower;  // decimal, rounded down
  std::string upper;  // decimal, rounded up
  std::string width;  // decimal, rounded up
  std::string tail;   // policy name
};

// Renders truncation results outward at `digits` significant digits, so the
// textual table is itself a (coarser) enclosure of each interval.
inline std::vector<sweep_row> make_rows(
    const std::vector<truncation_result>& results, unsigned digits = 12) {
  std::vector<sweep_row> rows;
  rows.reserve(results.size());
  for (const truncation_result& r : results) {
    sweep_row row;
    row.depth = r.depth;
    row.lower = to_decimal_string(r.value.lo(), digits, round_dir::down);
    row.upper = to_decimal_string(r.value.hi(), digits, round_dir::up);
    row.width = to_decimal_string(r.value.width(), digits, round_dir::up);
    row.tail = r.tail.name();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string to_csv(const std::vector<sweep_row>& rows) {
  std::string out = "depth,lower,upper,width,tail\n";
  for (const sweep_row& r : rows) {
    out += std::to_string(r.depth);
    out += ',';
    out += r.lower;
    out += ',';
    out += r.upper;
    out += ',';
    out += r.width;
    out += ',';
    out += r.tail;
    out += '\n';
  }
  return out;
}

namespace detail {

// Fixed-point rendering with exact integer arithmetic, round half up.
// Keeps SVG coordinates deterministic across platforms.
inline std::string fixed_decimal(const rational& q, unsigned places) {
  bigint scale = pow_int(bigint(10), places);
  rational scaled = q * scale;
  bigint n = numerator(scaled), d = denominator(scaled);
  bigint twice = 2 * n + d;  // floor(n/d + 1/2) = floor((2n+d)/(2d))
  bigint units = floor_div(twice, 2 * d);
  bool neg = units < 0;
  if (neg) units = -units;
  std::string digits = units.str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return (neg ? "-" : "") + out;
}

inline std::string limit_label(const rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return fixed_decimal(q, 4);
}

}  // namespace detail

// A 640x400 plot: polyline through (depth, lower), dashed horizontal
// reference line at `limit`, plain axes with ticks.  Byte-deterministic for
// identical input.
inline std::string to_svg(const std::vector<sweep_row>& rows,
                          const rational& limit) {
  if (rows.empty()) throw empty_sweep_error("no rows to plot");

  const int width = 640, height = 400;
  const int ml = 64, mr = 24, mt = 24, mb = 44;
  const int plot_w = width - ml - mr, plot_h = height - mt - mb;

  std::vector<rational> lows;
  lows.reserve(rows.size());
  rational ymin = limit, ymax = limit;
  std::int64_t dmin = rows.front().depth, dmax = rows.front().depth;
  for (const sweep_row& r : rows) {
    rational v = parse_decimal(r.lower);
    lows.push_back(v);
    if (v < ymin) ymin = v;
    if (v > ymax) ymax = v;
    if (r.depth < dmin) dmin = r.depth;
    if (r.depth > dmax) dmax = r.depth;
  }
  rational yspan = ymax - ymin;
  if (yspan == 0) yspan = rational(1, 10);
  rational pad = yspan / 12;
  ymin -= pad;
  ymax += pad;
  yspan = ymax - ymin;

  auto px = [&](std::int64_t depth) {
    if (dmax == dmin) return rational(ml + plot_w / 2);
    return rational(ml) +
           rational(depth - dmin, dmax - dmin) * plot_w;
  };
  auto py = [&](const rational& v) {
    return rational(mt) + (ymax - v) / yspan * plot_h;
  };
  auto at = [&](const rational& v) { return detail::fixed_decimal(v, 2); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"400\" viewBox=\"0 0 640 400\">\n";

  // axes
  std::string x0 = std::to_string(ml), x1 = std::to_string(width - mr);
  std::string y0 = std::to_string(mt), y1 = std::to_string(height - mb);
  svg += "<g stroke=\"#333\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + x0 + "\" y1=\"" + y1 + "\" x2=\"" + x1 + "\" y2=\"" +
         y1 + "\"/>\n";
  svg += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" +
         y1 + "\"/>\n";
  const std::int64_t tick_step = (dmax - dmin) / 16 + 1;
  for (std::int64_t d = dmin; d <= dmax; d += tick_step) {
    std::string x = at(px(d));
    svg += "<line x1=\"" + x + "\" y1=\"" + y1 + "\" x2=\"" + x + "\" y2=\"" +
           std::to_string(height - mb + 5) + "\"/>\n";
  }
  std::vector<rational> y_marks = {rational(ymin + pad), limit,
                                   rational(ymax - pad)};
  y_marks.erase(std::unique(y_marks.begin(), y_marks.end()), y_marks.end());
  for (const rational& v : y_marks) {
    std::string y = at(py(v));
    svg += "<line x1=\"" + std::to_string(ml - 5) + "\" y1=\"" + y +
           "\" x2=\"" + x0 + "\" y2=\"" + y + "\"/>\n";
  }
  svg += "</g>\n";

  // labels
  svg += "<g font-family=\"monospace\" font-size=\"12\" fill=\"#333\">\n";
  for (std::int64_t d = dmin; d <= dmax; d += tick_step) {
    svg += "<text x=\"" + at(px(d) - 3) + "\" y=\"" +
           std::to_string(height - mb + 18) + "\">" + std::to_string(d) +
           "</text>\n";
  }
  for (const rational& v : y_marks) {
    svg += "<text x=\"4\" y=\"" + at(py(v) + 4) + "\">" +
           detail::fixed_decimal(v, 4) + "</text>\n";
  }
  svg += "<text x=\"" + at(rational(ml + plot_w / 2 - 20)) + "\" y=\"" +
         std::to_string(height - 8) + "\">depth</text>\n";
  svg += "</g>\n";

  // reference line at the limit
  std::string yl = at(py(limit));
  svg += "<line x1=\"" + x0 + "\" y1=\"" + yl + "\" x2=\"" + x1 + "\" y2=\"" +
         yl + "\" stroke=\"#b33\" stroke-width=\"1\" "
         "stroke-dasharray=\"5 4\"/>\n";
  svg += "<text x=\"" + std::to_string(width - mr - 52) + "\" y=\"" +
         at(py(limit) - 6) +
         "\" font-family=\"monospace\" font-size=\"12\" fill=\"#b33\">y=" +
         detail::limit_label(limit) + "</text>\n";

  // data series
  svg += "<polyline fill=\"none\" stroke=\"#06c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) svg += " ";
    svg += at(px(rows[i].depth)) + "," + at(py(lows[i]));
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

}  // namespace radix
