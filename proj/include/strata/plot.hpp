#pragma once

#include <optional>
#include <string>

#include "strata/root_datum.hpp"

namespace strata {

struct PlotSpec {
  int radius = 3;                     // rings of alcoves around the base
  std::optional<AffElt> highlight;
  bool shade_shrunken = false;
};

struct AlcoveCell {
  AffElt x;
  Int len = 0;
  int depth = 0;  // gallery distance from the base alcove in the tiling
  bool shrunken = false;
  std::vector<std::pair<double, double>> poly;
};

// The W_a-tiling restricted to the drawing window, gallery-BFS order.
std::vector<AlcoveCell> alcove_cells(const Group& g, int radius);

// SVG apartment picture for semisimple rank <= 2. Throws RankTooLarge above
// rank 2. Colors are fixed named constants (see README).
std::string plot_apartment(const Group& g, const PlotSpec& spec);

}  // namespace strata
