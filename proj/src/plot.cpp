#include "strata/plot.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "strata/affine.hpp"
#include "strata/errors.hpp"

namespace strata {

namespace {

constexpr const char* kBackground = "#ffffff";
constexpr const char* kWallStroke = "#333333";
constexpr const char* kBaseFill = "#ffd966";
constexpr const char* kHighlightFill = "#e06666";
constexpr const char* kShrunkenFill = "#d9ead3";
constexpr const char* kPlainFill = "#f3f3f3";

struct Embedding {
  const Group* g;
  std::vector<IVec> basis;      // simple coroots of the level
  std::vector<QVec> gram_cols;  // Gram matrix of the basis under B
  IMat b_form;                  // W-invariant bilinear form
  double u11, u21, u22;         // Cholesky factors

  std::pair<double, double> to_xy(const QVec& ambient) const {
    // coords in the coroot basis via the invariant form (central part of
    // the ambient vector projects away)
    size_t r = basis.size();
    QVec rhs(r, 0);
    for (size_t a = 0; a < r; ++a) {
      QVec bb = apply_mat(b_form, to_q(basis[a]));
      rhs[a] = dotq(bb, ambient);
    }
    auto sol = solve_columns(gram_cols, rhs);
    double c1 = r >= 1 ? sol.x[0].get_d() : 0.0;
    double c2 = r >= 2 ? sol.x[1].get_d() : 0.0;
    return {c1 * u11 + c2 * u21, c2 * u22};
  }
};

Embedding make_embedding(const Group& g) {
  Embedding e;
  e.g = &g;
  for (int i : g.simple_set())
    e.basis.push_back(g.datum().simple_coroots()[i]);
  int d = g.ambient_rank();
  e.b_form.assign(d, IVec(d, 0));
  for (const auto& w : g.weyl_elements()) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Int s = 0;
        for (int k = 0; k < d; ++k) s += w.coch[k][i] * w.coch[k][j];
        e.b_form[i][j] += s;
      }
  }
  size_t r = e.basis.size();
  e.gram_cols.assign(r, QVec(r, 0));
  for (size_t a = 0; a < r; ++a)
    for (size_t b = 0; b < r; ++b) {
      QVec bb = apply_mat(e.b_form, to_q(e.basis[a]));
      e.gram_cols[a][b] = dotq(bb, to_q(e.basis[b]));
    }
  double g11 = r >= 1 ? e.gram_cols[0][0].get_d() : 1.0;
  double g12 = r >= 2 ? e.gram_cols[1][0].get_d() : 0.0;
  double g22 = r >= 2 ? e.gram_cols[1][1].get_d() : 1.0;
  e.u11 = std::sqrt(g11);
  e.u21 = r >= 2 ? g12 / e.u11 : 0.0;
  e.u22 = r >= 2 ? std::sqrt(std::max(g22 - e.u21 * e.u21, 1e-9)) : 1.0;
  return e;
}

// vertices of the base alcove {-1 < <alpha, x> < 0} inside the coroot span,
// expressed as ambient rational points
std::vector<QVec> base_alcove_vertices(const Group& g) {
  size_t r = g.simple_set().size();
  const auto& roots = g.roots();
  // constraint rows over the coroot-basis coordinates
  std::vector<QVec> rows;
  for (int k = 0; k < g.num_positive(); ++k) {
    QVec row(r, 0);
    for (size_t a = 0; a < r; ++a)
      row[a] = dot(roots[k].alpha,
                   g.datum().simple_coroots()[g.simple_set()[a]]);
    rows.push_back(row);
  }
  auto feasible = [&](const QVec& c) {
    for (const auto& row : rows) {
      Rat v = dotq(row, c);
      if (v < -1 || v > 0) return false;
    }
    return true;
  };
  std::vector<QVec> verts;  // in coroot-basis coords
  auto push_unique = [&](const QVec& c) {
    for (const auto& v : verts)
      if (cmp_qvec(v, c) == 0) return;
    verts.push_back(c);
  };
  std::vector<Rat> bounds = {Rat(0), Rat(-1)};
  if (r == 1) {
    for (const auto& row : rows)
      for (const auto& b : bounds) {
        if (row[0] == 0) continue;
        QVec c{b / row[0]};
        if (feasible(c)) push_unique(c);
      }
  } else if (r == 2) {
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = i + 1; j < rows.size(); ++j)
        for (const auto& bi : bounds)
          for (const auto& bj : bounds) {
            Rat det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
            if (det == 0) continue;
            QVec c(2);
            c[0] = (bi * rows[j][1] - bj * rows[i][1]) / det;
            c[1] = (rows[i][0] * bj - rows[j][0] * bi) / det;
            if (feasible(c)) push_unique(c);
          }
  }
  // to ambient
  std::vector<QVec> out;
  for (const auto& c : verts) {
    QVec p(g.ambient_rank(), 0);
    for (size_t a = 0; a < r; ++a)
      p = addq(p, scaleq(c[a],
                         to_q(g.datum().simple_coroots()[g.simple_set()[a]])));
    out.push_back(p);
  }
  return out;
}

QVec act_on_point(const AffElt& x, const QVec& p) {
  QVec vp = x.v.act(p);
  for (size_t i = 0; i < vp.size(); ++i) vp[i] += Rat(x.lambda[i]);
  return vp;
}

}  // namespace

std::vector<AlcoveCell> alcove_cells(const Group& g, int radius) {
  size_t r = g.simple_set().size();
  if (r > 2)
    throw RankTooLarge("apartment plots require semisimple rank <= 2");
  if (r == 0) throw RankTooLarge("nothing to draw for a torus");

  Embedding emb = make_embedding(g);
  std::vector<QVec> base_verts = base_alcove_vertices(g);
  double diam = 0;
  for (const auto& v : base_verts) {
    auto [x, y] = emb.to_xy(v);
    diam = std::max(diam, std::hypot(x, y));
  }
  double rmax = (radius + 0.5) * std::max(diam, 1e-6) * 2.0;

  std::vector<AlcoveCell> cells;
  std::unordered_set<IVec, IVecHash> seen;
  std::deque<std::pair<AffElt, int>> frontier;
  AffElt id = aff_identity(g.datum());
  frontier.push_back({id, 0});
  seen.insert(aff_key(id));
  while (!frontier.empty()) {
    auto [x, depth] = frontier.front();
    frontier.pop_front();
    double cx = 0, cy = 0;
    std::vector<std::pair<double, double>> poly;
    for (const auto& v : base_verts) {
      auto [px, py] = emb.to_xy(act_on_point(x, v));
      poly.push_back({px, py});
      cx += px;
      cy += py;
    }
    cx /= poly.size();
    cy /= poly.size();
    if (std::hypot(cx, cy) > rmax) continue;
    std::sort(poly.begin(), poly.end(),
              [&](const std::pair<double, double>& a,
                  const std::pair<double, double>& b) {
                return std::atan2(a.second - cy, a.first - cx) <
                       std::atan2(b.second - cy, b.first - cx);
              });
    AlcoveCell cell;
    cell.x = x;
    cell.poly = poly;
    cell.len = length(g, x);
    cell.depth = depth;
    cell.shrunken = shrunken_status(g, x) != ShrunkenStatus::not_shrunken;
    cells.push_back(cell);
    for (const auto& s : g.affine_gens()) {
      AffElt nxt = aff_mul(x, s);
      if (seen.insert(aff_key(nxt)).second)
        frontier.push_back({nxt, depth + 1});
    }
  }
  return cells;
}

std::string plot_apartment(const Group& g, const PlotSpec& spec) {
  size_t r = g.simple_set().size();
  Embedding emb = make_embedding(g);
  std::vector<QVec> base_verts = base_alcove_vertices(g);
  double diam = 0;
  for (const auto& v : base_verts) {
    auto [x, y] = emb.to_xy(v);
    diam = std::max(diam, std::hypot(x, y));
  }
  double rmax = (spec.radius + 0.5) * std::max(diam, 1e-6) * 2.0;
  std::vector<AlcoveCell> cells = alcove_cells(g, spec.radius);

  // 512x512 viewBox, apartment disc scaled to fit
  double scale = 240.0 / rmax;
  auto sx = [&](double x) { return 256.0 + scale * x; };
  auto sy = [&](double y) { return 256.0 - scale * y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\">\n";
  svg << "<rect width=\"512\" height=\"512\" fill=\"" << kBackground
      << "\"/>\n";
  auto emit_poly = [&](const AlcoveCell& c, const char* fill) {
    if (r == 1) {
      // interval: draw as a strip
      double x0 = c.poly.front().first, x1 = c.poly.back().first;
      if (x0 > x1) std::swap(x0, x1);
      svg << "<rect x=\"" << sx(x0) << "\" y=\"" << 236.0 << "\" width=\""
          << scale * (x1 - x0) << "\" height=\"40\" fill=\"" << fill
          << "\" stroke=\"" << kWallStroke << "\"/>\n";
      return;
    }
    svg << "<polygon points=\"";
    for (size_t i = 0; i < c.poly.size(); ++i) {
      if (i) svg << " ";
      svg << sx(c.poly[i].first) << "," << sy(c.poly[i].second);
    }
    svg << "\" fill=\"" << fill << "\" stroke=\"" << kWallStroke
        << "\" stroke-width=\"1\"/>\n";
  };

  for (const auto& c : cells) {
    const char* fill = kPlainFill;
    if (spec.shade_shrunken && c.shrunken) fill = kShrunkenFill;
    if (c.len == 0 && c.x.lambda == IVec(g.ambient_rank(), 0) &&
        c.x.v.is_identity())
      fill = kBaseFill;
    emit_poly(c, fill);
  }
  if (spec.highlight) {
    AlcoveCell hc;
    hc.x = *spec.highlight;
    for (const auto& v : base_verts) {
      auto [px, py] = emb.to_xy(act_on_point(hc.x, v));
      hc.poly.push_back({px, py});
    }
    double cx = 0, cy = 0;
    for (auto& p : hc.poly) {
      cx += p.first;
      cy += p.second;
    }
    cx /= hc.poly.size();
    cy /= hc.poly.size();
    std::sort(hc.poly.begin(), hc.poly.end(),
              [&](const std::pair<double, double>& a,
                  const std::pair<double, double>& b) {
                return std::atan2(a.second - cy, a.first - cx) <
                       std::atan2(b.second - cy, b.first - cx);
              });
    emit_poly(hc, kHighlightFill);
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace strata
