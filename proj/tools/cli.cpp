#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "strata/affine.hpp"
#include "strata/alcove.hpp"
#include "strata/errors.hpp"
#include "strata/io.hpp"
#include "strata/lang.hpp"
#include "strata/oracle.hpp"
#include "strata/parse.hpp"
#include "strata/plot.hpp"
#include "strata/sigma.hpp"

namespace strata::cli {

namespace {

struct Options {
  std::string group = "GL:2";
  std::string delta = "id";
  std::string format = "json";
  size_t budget = kDefaultBudget;
  unsigned long seed = 0;
  std::string output;
};

void emit(std::ostream& out, const Options& opt, const std::string& text) {
  if (!opt.output.empty()) {
    std::ofstream f(opt.output);
    if (!f) throw SemanticError("cannot open output file: " + opt.output);
    f << text;
  } else {
    out << text;
  }
}

SeriesVec parse_series_vec(const FiniteField& f, int prec, const json& arr) {
  SeriesVec v;
  for (const auto& s : arr)
    v.push_back(ts_from_string(f, prec, s.get<std::string>()));
  return v;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  (void)err;
  CLI::App app{"sigma-conjugacy-class combinatorics of Iwahori double cosets"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--group", opt.group, "GL:n | SL:n | SP:2n | file:PATH");
  app.add_option("--delta", opt.delta, "id | perm:i1,i2,...");
  app.add_option("--format", opt.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--budget", opt.budget, "search node budget");
  app.add_option("--seed", opt.seed, "seed for randomized replay");
  app.add_option("-o,--output", opt.output, "write result to a file");

  std::string expr, expr2, instance_path;
  Int max_len = 8;
  int radius = 3;
  bool shade = false;
  std::string highlight;

  auto* c_len = app.add_subcommand("len", "length of an element");
  c_len->add_option("expr", expr)->required();
  auto* c_eta = app.add_subcommand("eta", "finite part eta(x)");
  c_eta->add_option("expr", expr)->required();
  auto* c_newton = app.add_subcommand("newton", "Newton point of [x]");
  c_newton->add_option("expr", expr)->required();
  auto* c_kappa = app.add_subcommand("kappa", "Kottwitz point of x");
  c_kappa->add_option("expr", expr)->required();
  auto* c_class = app.add_subcommand("class", "sigma-conjugacy class of x");
  c_class->add_option("expr", expr)->required();
  auto* c_defect = app.add_subcommand("defect", "defect of [x]");
  c_defect->add_option("expr", expr)->required();
  auto* c_shr = app.add_subcommand("shrunken", "shrunken status of x");
  c_shr->add_option("expr", expr)->required();
  auto* c_alc = app.add_subcommand("alcove-find", "minimal (J,w,delta)-alcove");
  c_alc->add_option("expr", expr)->required();
  auto* c_min = app.add_subcommand("minimal-newton",
                                   "unique minimal Newton stratum of IxI");
  c_min->add_option("expr", expr)->required();
  auto* c_vdim = app.add_subcommand("vdim", "virtual dimension d_x([y])");
  c_vdim->add_option("x", expr)->required();
  c_vdim->add_option("y", expr2)->required();
  auto* c_bgx = app.add_subcommand("bgx", "B(G)_x with stratum dimensions");
  c_bgx->add_option("expr", expr)->required();
  auto* c_table = app.add_subcommand("table", "full strata table for x");
  c_table->add_option("expr", expr)->required();
  auto* c_gap = app.add_subcommand("gap-search", "x with non-saturated B(G)_x");
  c_gap->add_option("--max-len", max_len, "length bound")->required();
  auto* c_lang = app.add_subcommand("lang-solve", "solve w - M sigma(w) = v");
  c_lang->add_option("instance", instance_path, "JSON instance file or -")
      ->required();
  auto* c_plot = app.add_subcommand("plot", "SVG apartment picture");
  c_plot->add_option("--radius", radius, "alcove rings");
  c_plot->add_option("--highlight", highlight, "element to highlight");
  c_plot->add_flag("--shade-shrunken", shade, "shade the shrunken region");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  auto rd = datum_from_cli(opt.group, opt.delta);
  const Group& g = rd->full_level();
  Oracle oracle(rd, opt.budget);
  if (opt.seed) oracle.set_replay_seed(opt.seed);

  if (c_len->parsed()) {
    AffElt x = parse_element(expr, *rd);
    emit(out, opt, std::to_string(length(g, x)) + "\n");
  } else if (c_eta->parsed()) {
    AffElt x = parse_element(expr, *rd);
    emit(out, opt, print_weyl(*rd, eta(g, x)) + "\n");
  } else if (c_newton->parsed()) {
    AffElt x = parse_element(expr, *rd);
    QVec nu = newton_point(g, x);
    json j = json::array();
    for (const auto& c : nu) j.push_back(rat_to_string(c));
    emit(out, opt, j.dump() + "\n");
  } else if (c_kappa->parsed()) {
    AffElt x = parse_element(expr, *rd);
    json j = kappa(g, x).canon;
    emit(out, opt, j.dump() + "\n");
  } else if (c_class->parsed()) {
    AffElt x = parse_element(expr, *rd);
    emit(out, opt, class_to_json(g, class_of(g, x)).dump() + "\n");
  } else if (c_defect->parsed()) {
    AffElt x = parse_element(expr, *rd);
    emit(out, opt, std::to_string(defect(g, class_of(g, x))) + "\n");
  } else if (c_shr->parsed()) {
    AffElt x = parse_element(expr, *rd);
    emit(out, opt, std::string(to_string(shrunken_status(g, x))) + "\n");
  } else if (c_alc->parsed()) {
    AffElt x = parse_element(expr, *rd);
    emit(out, opt, cert_to_json(g, find_minimal_pair(g, x)).dump() + "\n");
  } else if (c_min->parsed()) {
    AffElt x = parse_element(expr, *rd);
    emit(out, opt, class_to_json(g, minimal_newton(g, x)).dump() + "\n");
  } else if (c_vdim->parsed()) {
    AffElt x = parse_element(expr, *rd);
    AffElt y = parse_element(expr2, *rd);
    SigmaClass b = class_of(g, y);
    if (b.kappa != kappa(g, x))
      throw SemanticError("kappa(b) != kappa(x); virtual dimension "
                          "comparison is not meaningful");
    emit(out, opt, rat_to_string(virtual_dimension(g, x, b)) + "\n");
  } else if (c_bgx->parsed()) {
    AffElt x = parse_element(expr, *rd);
    const ReductionResult& r = oracle.reduce(g, x);
    if (opt.format == "csv") {
      StrataTable t = oracle.strata_table(g, x);
      emit(out, opt, table_to_csv(g, t));
    } else {
      emit(out, opt, reduction_to_json(g, r).dump(2) + "\n");
    }
  } else if (c_table->parsed()) {
    AffElt x = parse_element(expr, *rd);
    StrataTable t = oracle.strata_table(g, x);
    if (opt.format == "csv")
      emit(out, opt, table_to_csv(g, t));
    else
      emit(out, opt, table_to_json(g, t).dump(2) + "\n");
  } else if (c_gap->parsed()) {
    json j = json::array();
    for (const auto& x : oracle.gap_search(g, max_len))
      j.push_back(print_elt(*rd, x));
    emit(out, opt, j.dump(2) + "\n");
  } else if (c_lang->parsed()) {
    json inst;
    if (instance_path == "-") {
      std::cin >> inst;
    } else {
      std::ifstream f(instance_path);
      if (!f) throw SemanticError("cannot open instance: " + instance_path);
      f >> inst;
    }
    int p = inst.at("p").get<int>();
    int k = inst.value("k", 1);
    long q = inst.at("q").get<long>();
    int prec = inst.at("N").get<int>();
    FiniteField field(p, k);
    SeriesMat m;
    for (const auto& row : inst.at("M"))
      m.push_back(parse_series_vec(field, prec, row));
    SeriesVec v = parse_series_vec(field, prec, inst.at("v"));
    SeriesVec w = solve_lang(m, v, prec, q);
    json j = json::array();
    for (const auto& s : w) j.push_back(ts_to_string(s));
    emit(out, opt, j.dump(2) + "\n");
  } else if (c_plot->parsed()) {
    PlotSpec spec;
    spec.radius = radius;
    spec.shade_shrunken = shade;
    if (!highlight.empty()) spec.highlight = parse_element(highlight, *rd);
    emit(out, opt, plot_apartment(g, spec));
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidDatum& e) {
    err << "invalid datum: " << e.what() << "\n";
    return 3;
  } catch (const SearchBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 5;
  } catch (const json::exception& e) {
    err << "bad input: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace strata::cli
