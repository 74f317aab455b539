#include <catch2/catch_amalgamated.hpp>

#include "bifrm/dframe.hpp"
#include "bifrm/duality.hpp"

using namespace bifrm;

namespace {

BispacePtr make_space(int n, std::vector<PointSet> tp, std::vector<PointSet> tm) {
  return std::make_shared<Bispace>(n, std::move(tp), std::move(tm));
}

std::vector<BispacePtr> sample_bispaces() {
  std::vector<BispacePtr> out;
  out.push_back(make_space(1, {}, {}));
  out.push_back(make_space(2, {}, {}));
  out.push_back(make_space(2, {0b01}, {}));
  out.push_back(make_space(2, {0b01}, {0b01}));
  out.push_back(make_space(2, {0b01}, {0b10}));
  out.push_back(make_space(2, {0b01, 0b10}, {0b01, 0b10}));
  out.push_back(make_space(3, {0b001, 0b011}, {}));
  out.push_back(make_space(3, {0b001, 0b011}, {0b100, 0b110}));
  out.push_back(make_space(3, {0b001, 0b010, 0b011}, {0b100}));
  return out;
}

}  // namespace

TEST_CASE("d-frame validation") {
  SECTION("the d-frame 2 is valid") {
    REQUIRE(DFrame::two()->validate().valid);
  }
  SECTION("con not downward closed violates axiom 1") {
    auto d = DFrame::make(Frame::two(), Frame::two(), {{1, 0}}, {}, /*normalize=*/false);
    auto rep = d->validate();
    REQUIRE(!rep.valid);
    bool ax1 = false;
    for (auto& v : rep.violations)
      if (v.find("axiom 1") != std::string::npos) ax1 = true;
    REQUIRE(ax1);
  }
  SECTION("balance violations are reported") {
    // con (1,1) with tot (1,0) forces 1 <= 0
    auto d = DFrame::make(Frame::two(), Frame::two(), {{1, 1}}, {{1, 0}},
                          /*normalize=*/false);
    auto rep = d->validate();
    REQUIRE(!rep.valid);
    bool bal = false;
    for (auto& v : rep.violations)
      if (v.find("balance") != std::string::npos) bal = true;
    REQUIRE(bal);
  }
  SECTION("normalization closes and reports additions") {
    DFrame::NormalizationReport report;
    auto d = DFrame::make(Frame::two(), Frame::two(), {{1, 0}}, {}, true, &report);
    REQUIRE(d->con(0, 0));
    REQUIRE(!report.added_con.empty());
  }
}

TEST_CASE("delta functor") {
  SECTION("on (2,2,2) gives the d-frame 2") {
    REQUIRE(*delta_functor(Biframe::two()) == *DFrame::two());
  }
  SECTION("agrees with the d-frame of opens on every sample bispace") {
    for (const auto& x : sample_bispaces()) {
      auto via_biframe = delta_functor(b_omega(*x).biframe);
      auto direct = d_omega(*x).dframe;
      REQUIRE(*via_biframe == *direct);
    }
  }
  SECTION("outputs always validate (balance included)") {
    for (const auto& x : sample_bispaces()) {
      REQUIRE(delta_functor(b_omega(*x).biframe)->validate().valid);
      REQUIRE(delta_functor(b_omega_fin(*x).biframe)->validate().valid);
    }
  }
}

TEST_CASE("gamma functor") {
  SECTION("on the d-frame 2 gives (2,2,2)") {
    BiframePtr g = gamma_functor(DFrame::two());
    REQUIRE(g->l()->size() == 2);
    REQUIRE(g->lp()->size() == 2);
  }
  SECTION("gamma outputs are finitary") {
    for (const auto& x : sample_bispaces())
      REQUIRE(is_finitary(gamma_functor(d_omega(*x).dframe)));
  }
  SECTION("spectrum of gamma equals the d-spectrum") {
    for (const auto& x : sample_bispaces()) {
      auto d = d_omega(*x).dframe;
      Spectrum bs = bipoints(gamma_functor(d));
      DSpectrum ds = dpoints(d);
      REQUIRE(bs.pairs == ds.pairs);
      REQUIRE(*bs.space == *ds.space);
    }
  }
  SECTION("the counit pair of identities is a biframe map") {
    for (const auto& x : sample_bispaces()) {
      BiframePtr b = b_omega_fin(*x).biframe;
      BiframePtr gd = gamma_functor(delta_functor(b));
      auto counit = try_biframe_map(gd, b, FrameMap::identity(b->lp()),
                                    FrameMap::identity(b->lm()));
      REQUIRE(counit.has_value());
    }
  }
}

TEST_CASE("d-spectrum") {
  SECTION("dpt(2) is a single point") {
    REQUIRE(dpoints(DFrame::two()).space->size() == 1);
  }
  SECTION("strictness witness: 2 points, tau+ = tau- = {∅,{a},X}") {
    auto x = make_space(2, {0b01}, {0b01});
    REQUIRE(dpoints(d_omega(*x).dframe).space->size() == 4);
    REQUIRE(bipoints(b_omega_fin(*x).biframe).space->size() == 2);
  }
  SECTION("spectra chain as subsets of component point pairs") {
    for (const auto& x : sample_bispaces()) {
      auto bi = bipoints(b_omega(*x).biframe);
      auto fin = bipoints(b_omega_fin(*x).biframe);
      auto d = dpoints(d_omega(*x).dframe);
      auto subset = [](const std::vector<std::pair<int, int>>& a,
                       const std::vector<std::pair<int, int>>& b) {
        for (auto& p : a)
          if (std::find(b.begin(), b.end(), p) == b.end()) return false;
        return true;
      };
      REQUIRE(subset(bi.pairs, fin.pairs));
      REQUIRE(subset(fin.pairs, d.pairs));
      // X embeds into the first via the unit
      auto unit = unit_map(x, Duality::biframe);
      REQUIRE(unit.unit.bicontinuous());
    }
  }
}

TEST_CASE("composite functor identities") {
  SECTION("d-frame of opens factors through the finitary biframe of opens") {
    for (const auto& x : sample_bispaces()) {
      auto via = delta_functor(b_omega_fin(*x).biframe);
      REQUIRE(*via == *d_omega(*x).dframe);
      // and through the coreflection of the full biframe of opens
      auto via2 = delta_functor(fin_coreflect(b_omega(*x).biframe).biframe);
      REQUIRE(*via2 == *d_omega(*x).dframe);
    }
  }
  SECTION("delta of gamma restores the d-frame on finite instances") {
    for (const auto& x : sample_bispaces()) {
      auto d = d_omega(*x).dframe;
      auto dgd = delta_functor(gamma_functor(d));
      // unit is the pair of identities: con/tot can only grow
      for (auto [a, b] : d->con_pairs()) REQUIRE(dgd->con(a, b));
      for (auto [a, b] : d->tot_pairs()) REQUIRE(dgd->tot(a, b));
    }
  }
}
