#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/errors.hpp"
#include "strata/parse.hpp"
#include "strata/plot.hpp"

using namespace strata;

TEST_CASE("rank restrictions") {
  PlotSpec spec;
  CHECK_THROWS_AS(plot_apartment(RootDatum::builtin("GL:4")->full_level(),
                                 spec),
                  RankTooLarge);
  CHECK_THROWS_AS(plot_apartment(RootDatum::builtin("GL:1")->full_level(),
                                 spec),
                  RankTooLarge);
}

TEST_CASE("rank one strip") {
  auto sl2 = RootDatum::builtin("SL:2");
  PlotSpec spec;
  spec.radius = 3;
  std::string svg = plot_apartment(sl2->full_level(), spec);
  CHECK(svg.find("viewBox=\"0 0 512 512\"") != std::string::npos);
  CHECK(svg.find("<rect") != std::string::npos);
  CHECK(svg.find("#ffd966") != std::string::npos);  // base alcove fill
}

TEST_CASE("rank two tiling") {
  auto sl3 = RootDatum::builtin("SL:3");
  PlotSpec spec;
  spec.radius = 2;
  spec.shade_shrunken = true;
  spec.highlight = parse_element("1", *sl3);
  std::string svg = plot_apartment(sl3->full_level(), spec);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("#e06666") != std::string::npos);  // highlight fill
  // one polygon per alcove plus the highlight
  auto cells = alcove_cells(sl3->full_level(), 2);
  size_t count = 0;
  for (size_t pos = 0; (pos = svg.find("<polygon", pos)) != std::string::npos;
       ++pos)
    ++count;
  CHECK(count == cells.size() + 1);
}

TEST_CASE("gallery distance equals length on the tiling") {
  for (const char* name : {"SL:2", "SL:3", "SP:4", "GL:2"}) {
    auto rd = RootDatum::builtin(name);
    const Group& g = rd->full_level();
    auto cells = alcove_cells(g, 3);
    CHECK(cells.size() > 5);
    for (const auto& c : cells) CHECK(c.depth == c.len);
  }
}

TEST_CASE("GL2 projects to the semisimple quotient line") {
  auto gl2 = RootDatum::builtin("GL:2");
  PlotSpec spec;
  spec.radius = 2;
  spec.highlight = parse_element("t[1,1]", *gl2);  // central: same cell as 1
  std::string svg = plot_apartment(gl2->full_level(), spec);
  CHECK(svg.find("<svg") != std::string::npos);
}
