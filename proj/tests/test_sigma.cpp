#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "strata/alcove.hpp"
#include "strata/errors.hpp"
#include "strata/io.hpp"
#include "strata/oracle.hpp"
#include "strata/parse.hpp"
#include "strata/sigma.hpp"

using namespace strata;

namespace {

AffElt elt(const RootDatum& rd, const std::string& text) {
  return parse_element(text, rd);
}

QVec qv(std::initializer_list<Rat> xs) { return QVec(xs); }

}  // namespace

TEST_CASE("newton points") {
  auto gl2 = RootDatum::builtin("GL:2");
  const Group& g2 = gl2->full_level();
  CHECK(cmp_qvec(newton_point(g2, elt(*gl2, "t[1,0]*s1")),
                 qv({Rat(1, 2), Rat(1, 2)})) == 0);
  CHECK(cmp_qvec(newton_point(g2, elt(*gl2, "t[2,0]")), qv({2, 0})) == 0);
  auto sl2 = RootDatum::builtin("SL:2");
  CHECK(cmp_qvec(newton_point(sl2->full_level(), elt(*sl2, "t[-2,2]*s1")),
                 qv({0, 0})) == 0);
}

TEST_CASE("newton point is a class invariant") {
  std::mt19937_64 rng(5);
  for (const char* name : {"GL:2", "SL:3", "SP:4"}) {
    auto rd = RootDatum::builtin(name);
    const Group& g = rd->full_level();
    for (int i = 0; i < 40; ++i) {
      AffElt y = testing::random_element(*rd, rng, 5);
      AffElt h = testing::random_element(*rd, rng, 5);
      AffElt conj = aff_mul(aff_mul(h, y), rd->delta_of(aff_inv(h)));
      QVec nu = newton_point(g, y);
      CHECK(cmp_qvec(nu, newton_point(g, conj)) == 0);
      CHECK(cmp_qvec(rd->delta_q(nu), nu) == 0);
      CHECK(class_of(g, y) == class_of(g, conj));
    }
  }
  // with nontrivial delta: swapped A1 x A1
  json full = {
      {"name", "A1xA1-swap"},
      {"ambient_rank", 4},
      {"simple_roots", {{1, -1, 0, 0}, {0, 0, 1, -1}}},
      {"simple_coroots", {{1, -1, 0, 0}, {0, 0, 1, -1}}},
      {"delta",
       {{"perm", {2, 1}},
        {"matrix",
         {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}}}}};
  auto rd = datum_from_json(full);
  const Group& g = rd->full_level();
  // t^{(2,0,0,0)}: average of (2,0,0,0) and its swap, dominantized
  QVec nu = newton_point(g, aff_translation(*rd, IVec{2, 0, 0, 0}));
  CHECK(cmp_qvec(nu, qv({1, 0, 1, 0})) == 0);
  std::mt19937_64 rng2(6);
  for (int i = 0; i < 30; ++i) {
    AffElt y = testing::random_element(*rd, rng2, 4);
    AffElt h = testing::random_element(*rd, rng2, 4);
    AffElt conj = aff_mul(aff_mul(h, y), rd->delta_of(aff_inv(h)));
    CHECK(class_of(g, y) == class_of(g, conj));
  }
}

TEST_CASE("class equality") {
  auto gl2 = RootDatum::builtin("GL:2");
  const Group& g = gl2->full_level();
  SigmaClass c0 = class_of(g, aff_identity(*gl2));
  CHECK(cmp_qvec(c0.nu, qv({0, 0})) == 0);
  CHECK(c0.kappa.canon == IVec{0});
  SigmaClass ct = class_of(g, elt(*gl2, "t[0,1]"));
  CHECK(cmp_qvec(ct.nu, qv({1, 0})) == 0);
  CHECK(ct.kappa.canon == IVec{1});
  CHECK(class_of(g, elt(*gl2, "t[1,0]*s1")) ==
        class_of(g, elt(*gl2, "t[0,1]*s1")));
}

TEST_CASE("partial order") {
  auto gl2 = RootDatum::builtin("GL:2");
  const Group& g = gl2->full_level();
  CHECK(leq(g, class_of(g, aff_identity(*gl2)),
            class_of(g, elt(*gl2, "t[1,-1]"))));
  SigmaClass x0 = class_of(g, elt(*gl2, "t[1,0]*s1"));
  SigmaClass mu = class_of(g, elt(*gl2, "t[1,0]"));
  CHECK(leq(g, x0, mu));
  CHECK(x0 != mu);
  CHECK_FALSE(leq(g, mu, x0));
  // kappa mismatch: incomparable
  CHECK_FALSE(leq(g, class_of(g, elt(*gl2, "t[1,0]")),
                  class_of(g, elt(*gl2, "t[1,1]"))));
}

TEST_CASE("basic classes") {
  auto gl2 = RootDatum::builtin("GL:2");
  const Group& g2 = gl2->full_level();
  SigmaClass b1 = basic_class(g2, g2.kappa_of_lambda(IVec{1, 0}));
  CHECK(cmp_qvec(b1.nu, qv({Rat(1, 2), Rat(1, 2)})) == 0);
  CHECK(is_basic(g2, b1));
  SigmaClass b0 = basic_class(g2, g2.kappa_of_lambda(IVec{0, 0}));
  CHECK(cmp_qvec(b0.nu, qv({0, 0})) == 0);
  auto gl4 = RootDatum::builtin("GL:4");
  const Group& g4 = gl4->full_level();
  SigmaClass b2 = basic_class(g4, g4.kappa_of_lambda(IVec{1, 1, 0, 0}));
  CHECK(cmp_qvec(b2.nu, qv({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)})) ==
        0);
  CHECK_FALSE(is_basic(g2, class_of(g2, elt(*gl2, "t[2,0]"))));
}

TEST_CASE("defect values") {
  auto gl2 = RootDatum::builtin("GL:2");
  const Group& g = gl2->full_level();
  CHECK(defect(g, class_of(g, aff_identity(*gl2))) == 0);
  CHECK(defect(g, class_of(g, elt(*gl2, "t[1,0]*s1"))) == 1);
  CHECK(defect(g, class_of(g, elt(*gl2, "t[1,0]"))) == 0);
  // GL3 superbasic: defect = 3 - gcd(1,3) = 2
  auto gl3 = RootDatum::builtin("GL:3");
  const Group& g3 = gl3->full_level();
  CHECK(defect(g3, class_of(g3, omega_rep(g3, IVec{1, 0, 0}))) == 2);

  SigmaClass no_rep;
  no_rep.nu = qv({0, 0});
  no_rep.kappa = g.kappa_of_lambda(IVec{0, 0});
  no_rep.level = g.simple_set();
  CHECK_THROWS_AS(defect(g, no_rep), NoRepresentative);
}

TEST_CASE("defect with nontrivial delta") {
  // GL2 x GL2 with the factor swap (a restriction of scalars): the rank of
  // a maximal split torus is 2, and the basic class of kappa = [e1] has a
  // four-cycle as twisted finite part, so its defect is 2 - 1 = 1.
  json swapped = {
      {"name", "A1xA1-swap"},
      {"ambient_rank", 4},
      {"simple_roots", {{1, -1, 0, 0}, {0, 0, 1, -1}}},
      {"simple_coroots", {{1, -1, 0, 0}, {0, 0, 1, -1}}},
      {"delta",
       {{"perm", {2, 1}},
        {"matrix",
         {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}}}}};
  auto rd = datum_from_json(swapped);
  const Group& g = rd->full_level();
  CHECK(g.fixed_space_dim_twisted(weyl_identity(4)) == 2);
  SigmaClass b = basic_class(g, g.kappa_of_lambda(IVec{1, 0, 0, 0}));
  CHECK(cmp_qvec(b.nu, QVec{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}) ==
        0);
  CHECK(defect(g, b) == 1);
  // the trivial class has defect 0
  CHECK(defect(g, class_of(g, aff_identity(*rd))) == 0);
}

TEST_CASE("defect is representative independent") {
  // every element of the length-preserving orbit of a representative gives
  // the same defect
  auto gl3 = RootDatum::builtin("GL:3");
  const Group& g = gl3->full_level();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    AffElt y = testing::random_element(*gl3, rng, 4);
    SigmaClass c = class_of(g, y);
    int d = defect(g, c);
    AffElt m = min_length_rep(g, y);
    for (const auto& s : g.affine_gens()) {
      AffElt conj = aff_mul(aff_mul(s, m), gl3->delta_of(s));
      if (length(g, conj) != length(g, m)) continue;
      SigmaClass c2 = class_of(g, conj);
      CHECK(defect(g, c2) == d);
    }
  }
}

TEST_CASE("adjoint datum: torsion fundamental group") {
  // PGL2: cocharacters Z with coroot 2, so pi1 = Z/2. Both basic classes
  // have central Newton point; the nontrivial one is superbasic with
  // defect 1.
  json pgl2 = {{"name", "PGL2"},
               {"ambient_rank", 1},
               {"simple_roots", {{1}}},
               {"simple_coroots", {{2}}}};
  auto rd = datum_from_json(pgl2);
  const Group& g = rd->full_level();
  CHECK(g.pi1_invariant_factors() == IVec{2});
  Pi1Element k1 = g.kappa_of_lambda(IVec{1});
  CHECK(k1.canon == IVec{1});
  CHECK(g.kappa_of_lambda(IVec{2}).canon == IVec{0});
  SigmaClass b1 = basic_class(g, k1);
  CHECK(cmp_qvec(b1.nu, QVec{0}) == 0);
  CHECK(is_basic(g, b1));
  CHECK(defect(g, b1) == 1);
  CHECK(defect(g, class_of(g, aff_identity(*rd))) == 0);
  // the two basic classes differ only through kappa
  CHECK(b1 != class_of(g, aff_identity(*rd)));

  Oracle oracle(rd);
  auto win = oracle.omega_window(g);
  CHECK(win.size() == 2);
  for (const auto& x : oracle.ball(g, 8)) {
    StrataTable t = oracle.strata_table(g, x);
    CHECK(t.has_unique_min);
    CHECK(t.rows.front().cls == minimal_newton(g, x));
    CHECK(t.rows.back().codim == 0);
    for (const auto& row : t.rows) CHECK(row.delta >= 0);
  }
}

TEST_CASE("levi transfer: GL2 torus collapse") {
  auto gl2 = RootDatum::builtin("GL:2");
  const Group& g = gl2->full_level();
  const Group& t = gl2->level({});
  SigmaClass b1 = class_of(t, aff_translation(*gl2, IVec{0, 1}));
  SigmaClass b3 = class_of(t, aff_translation(*gl2, IVec{1, 0}));
  CHECK(b1 != b3);  // distinct torus classes
  CHECK(levi_transfer(t, g, b1) == levi_transfer(t, g, b3));
  CHECK(cmp_qvec(levi_transfer(t, g, b1).nu, qv({1, 0})) == 0);
  // no torus class hits nu = (1/2,1/2): torus Newton points are integral
  SigmaClass half = basic_class(g, g.kappa_of_lambda(IVec{1, 0}));
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b) {
      SigmaClass tb = class_of(t, aff_translation(*gl2, IVec{a, b}));
      CHECK(levi_transfer(t, g, tb) != half);
    }
}

TEST_CASE("levi transfer: GL2xGL2 in GL4 identifies the swap pair") {
  auto gl4 = RootDatum::builtin("GL:4");
  const Group& g = gl4->full_level();
  const Group& m = gl4->level({0, 2});
  AffElt x0mu = elt(*gl4, "t[1,0,0,1]*s1");   // ([x0], [mu])
  AffElt mux0 = elt(*gl4, "t[0,1,1,0]*s3");   // ([mu], [x0])
  SigmaClass a = class_of(m, x0mu);
  SigmaClass b = class_of(m, mux0);
  CHECK(a != b);
  CHECK(levi_transfer(m, g, a) == levi_transfer(m, g, b));
}

TEST_CASE("enumerate_segment") {
  auto gl2 = RootDatum::builtin("GL:2");
  const Group& g2 = gl2->full_level();
  auto seg = enumerate_segment(g2, g2.kappa_of_lambda(IVec{1, 0}),
                               qv({1, 0}));
  REQUIRE(seg.size() == 2);
  CHECK(cmp_qvec(seg[0].nu, qv({Rat(1, 2), Rat(1, 2)})) == 0);
  CHECK(cmp_qvec(seg[1].nu, qv({1, 0})) == 0);

  auto sl2 = RootDatum::builtin("SL:2");
  const Group& gs = sl2->full_level();
  auto seg2 = enumerate_segment(gs, gs.kappa_of_lambda(IVec{0, 0}),
                                qv({1, -1}));
  REQUIRE(seg2.size() == 2);
  CHECK(cmp_qvec(seg2[0].nu, qv({0, 0})) == 0);
  CHECK(cmp_qvec(seg2[1].nu, qv({1, -1})) == 0);

  auto gl4 = RootDatum::builtin("GL:4");
  const Group& g4 = gl4->full_level();
  auto seg3 = enumerate_segment(g4, g4.kappa_of_lambda(IVec{1, 1, 0, 0}),
                                qv({1, 1, 0, 0}));
  std::set<std::string> nus;
  for (const auto& c : seg3) {
    std::string s;
    for (const auto& q : c.nu) s += rat_to_string(q) + ",";
    nus.insert(s);
  }
  CHECK(nus.count("1/2,1/2,1/2,1/2,"));
  CHECK(nus.count("1,1/2,1/2,0,"));
  CHECK(nus.count("1,1,0,0,"));
}

TEST_CASE("segment classes carry valid representatives") {
  auto gl3 = RootDatum::builtin("GL:3");
  const Group& g = gl3->full_level();
  auto seg = enumerate_segment(g, g.kappa_of_lambda(IVec{1, 1, 0}),
                               qv({2, 0, 0}));
  CHECK(!seg.empty());
  for (const auto& c : seg) {
    REQUIRE(c.rep.has_value());
    CHECK(class_of(g, *c.rep) == c);
  }
}

TEST_CASE("basic class is minimal in its kappa fiber") {
  auto gl3 = RootDatum::builtin("GL:3");
  const Group& g = gl3->full_level();
  Pi1Element k = g.kappa_of_lambda(IVec{1, 1, 0});
  SigmaClass b0 = basic_class(g, k);
  for (const auto& c : enumerate_segment(g, k, qv({2, 0, 0})))
    CHECK(leq(g, b0, c));
}

TEST_CASE("transfer preserves the partial order") {
  std::mt19937_64 rng(13);
  for (const char* name : {"GL:3", "SP:4", "GL:4"}) {
    auto rd = RootDatum::builtin(name);
    const Group& g = rd->full_level();
    for (const auto& j : g.delta_stable_subsets()) {
      if (static_cast<int>(j.size()) == rd->num_simple()) continue;
      const Group& m = rd->level(j);
      std::vector<SigmaClass> classes;
      for (int i = 0; i < 25; ++i)
        classes.push_back(
            class_of(m, testing::random_element_level(m, rng, 4, 2)));
      for (const auto& b : classes)
        for (const auto& b2 : classes) {
          if (!leq(m, b, b2)) continue;
          CHECK(leq(g, levi_transfer(m, g, b), levi_transfer(m, g, b2)));
          if (b != b2)
            CHECK(levi_transfer(m, g, b) != levi_transfer(m, g, b2));
        }
    }
  }
}

TEST_CASE("basic Levi Newton points are antidominant") {
  // Under the offset normalization used here (base alcove antidominant) the
  // basic class of kappa_M(tilde_x) pairs <= 0 with every simple root of
  // the big group.
  for (const char* name : {"GL:3", "SL:3", "SP:4"}) {
    auto rd = RootDatum::builtin(name);
    const Group& g = rd->full_level();
    Oracle oracle(rd);
    for (const auto& x : oracle.ball(g, 5)) {
      AlcoveCertificate cert = find_minimal_pair(g, x);
      const Group& m = rd->level(cert.j);
      SigmaClass b0 =
          basic_class(m, m.kappa_of_lambda(cert.tilde_x.lambda));
      for (int i : g.simple_set())
        CHECK(dotq(rd->simple_roots()[i], b0.nu) <= 0);
    }
  }
}
