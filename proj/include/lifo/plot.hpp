// Native SVG line charts (no plotting dependency): a grid of panels, each a
// set of labelled series.  CSV stays the canonical study output; these
// charts mirror its shape for eyeballing.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lifo/bench.hpp"

namespace lifo {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;  // same length as x
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

// Standalone SVG document: `title` on top, panels in a two-column grid.
void write_svg_panels(std::ostream& out, const std::string& title,
                      const std::vector<Panel>& panels);

// The four study panels for one objective — gap, moves, max stack and avg
// stack versus S — with one series per instance size n.
std::vector<Panel> study_panels(const std::vector<AggregateRow>& aggregates,
                                Objective obj);

}  // namespace lifo
