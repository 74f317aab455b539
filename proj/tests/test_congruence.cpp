#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "bifrm/congruence.hpp"
#include "bifrm/frame.hpp"
#include "bifrm/poset.hpp"

using namespace bifrm;

namespace {

// Brute-force congruence oracle: every partition of the carrier, filtered by
// compatibility. Usable up to ~6 elements.
std::vector<Congruence> all_congruences_bruteforce(const FramePtr& L) {
  std::vector<Congruence> out;
  int n = L->size();
  std::vector<int> cls(n, 0);
  // enumerate restricted growth strings
  std::function<void(int, int)> rec = [&](int pos, int maxc) {
    if (pos == n) {
      Congruence c(L, cls);
      if (c.validate().valid) out.push_back(c);
      return;
    }
    for (int v = 0; v <= maxc + 1 && v < n; ++v) {
      cls[pos] = v;
      rec(pos + 1, std::max(maxc, v));
    }
  };
  rec(0, -1);
  return out;
}

std::vector<FramePtr> small_frames() {
  return {Frame::two(), Frame::chain(3), Frame::chain(4), Frame::boolean(2),
          Frame::downset_lattice(Poset({"a", "b", "c"}, {{0, 2}, {1, 2}})),
          Frame::downset_lattice(Poset::antichain(2))};
}

Relation random_relation(const FramePtr& L, std::mt19937_64& rng, int npairs) {
  Relation r{L, {}};
  std::uniform_int_distribution<int> d(0, L->size() - 1);
  for (int i = 0; i < npairs; ++i) r.pairs.push_back({d(rng), d(rng)});
  return r;
}

}  // namespace

TEST_CASE("congruence closure basics") {
  auto C3 = Frame::chain(3);
  int a = 1;  // middle element in canonical order (popcount sort)

  SECTION("empty relation gives the diagonal") {
    REQUIRE(congruence_closure(C3, {C3, {}}) == Congruence::diagonal(C3));
  }
  SECTION("forcing 1 <= 0 gives the total congruence") {
    REQUIRE(congruence_closure(C3, {C3, {{C3->top(), C3->bot()}}}) == Congruence::total(C3));
  }
  SECTION("forcing 1 <= a on the 3-chain merges {a,1}") {
    Congruence c = congruence_closure(C3, {C3, {{C3->top(), a}}});
    REQUIRE(c.classes() == 2);
    REQUIRE(c.same(a, C3->top()));
    REQUIRE(!c.same(C3->bot(), a));
    // least among compatible partitions forcing the pair
    for (const Congruence& d : all_congruences_bruteforce(C3))
      if (d.same(a, C3->top())) REQUIRE(c.refines(d));
  }
}

TEST_CASE("congruence closure is a closure operator") {
  std::mt19937_64 rng(7);
  for (const auto& L : small_frames()) {
    for (int trial = 0; trial < 30; ++trial) {
      Relation r = random_relation(L, rng, trial % 4);
      Relation s = random_relation(L, rng, 1 + trial % 3);
      Congruence cr = congruence_closure(L, r);
      Congruence cs = congruence_closure(L, s);

      // extensive: every forced inequality holds in the closure
      for (auto [x, y] : r.pairs) REQUIRE(cr.same(L->join(x, y), y));

      // idempotent: closing the closure's pairs changes nothing
      Relation again{L, {}};
      for (int e = 0; e < L->size(); ++e)
        for (int f = 0; f < L->size(); ++f)
          if (cr.same(e, f)) again.pairs.push_back({e, f});
      REQUIRE(congruence_closure(L, again) == cr);

      // monotone: r ⊆ r ∪ s gives a finer-or-equal closure
      Relation both{L, r.pairs};
      both.pairs.insert(both.pairs.end(), s.pairs.begin(), s.pairs.end());
      REQUIRE(cr.refines(congruence_closure(L, both)));
    }
  }
}

TEST_CASE("quotient") {
  auto C3 = Frame::chain(3);

  SECTION("by the diagonal is isomorphic to the frame") {
    auto q = quotient(C3, Congruence::diagonal(C3));
    REQUIRE(q.frame->isomorphic_to(*C3));
    REQUIRE(q.q.bijective());
  }
  SECTION("by the total congruence is the one-element lattice") {
    auto q = quotient(C3, Congruence::total(C3));
    REQUIRE(q.frame->size() == 1);
  }
  SECTION("class map is a frame surjection") {
    for (const auto& L : small_frames())
      for (const Congruence& c : all_congruences_bruteforce(L)) {
        auto q = quotient(L, c);
        REQUIRE(q.q.preserves_structure());
        REQUIRE(q.q.surjective());
      }
  }
}

TEST_CASE("iterated quotients agree with witnessed unions") {
  // (L/R)/S = L/(R ∪ w(S)) with the class maximum as witness
  std::mt19937_64 rng(11);
  std::vector<FramePtr> frames = small_frames();
  frames.push_back(Frame::downset_lattice(Poset({"a", "b"}, {})));  // 4 elements
  for (const auto& L : frames) {
    if (L->size() > 6) continue;
    for (int trial = 0; trial < 40; ++trial) {
      Relation r = random_relation(L, rng, trial % 3);
      Congruence cr = congruence_closure(L, r);
      auto qr = quotient(L, cr);

      Relation s{qr.frame, {}};
      std::uniform_int_distribution<int> d(0, qr.frame->size() - 1);
      for (int i = 0; i < 1 + trial % 2; ++i) s.pairs.push_back({d(rng), d(rng)});
      Congruence cs = congruence_closure(qr.frame, s);

      // left side: pull the composite kernel back to L
      std::vector<int> composite(L->size());
      for (int e = 0; e < L->size(); ++e) composite[e] = cs.class_of(qr.q(e));
      Congruence left(L, composite);

      // right side: witnesses are the class maxima
      std::vector<int> maxima = cr.class_maxima();
      Relation rw{L, r.pairs};
      for (auto [x, y] : s.pairs) {
        // find the L-elements whose classes are x and y
        int wx = -1, wy = -1;
        for (int e = 0; e < L->size(); ++e) {
          if (qr.q(e) == x) wx = maxima[cr.class_of(e)];
          if (qr.q(e) == y) wy = maxima[cr.class_of(e)];
        }
        rw.pairs.push_back({wx, wy});
      }
      REQUIRE(congruence_closure(L, rw) == left);
    }
  }
}

TEST_CASE("congruence lattice") {
  SECTION("of 2 is the 2-element frame") {
    auto cl = congruence_lattice(Frame::two());
    REQUIRE(cl.frame->size() == 2);
  }
  SECTION("of C3 is the 4-element Boolean lattice") {
    auto cl = congruence_lattice(Frame::chain(3));
    REQUIRE(cl.frame->size() == 4);
    REQUIRE(cl.frame->isomorphic_to(*Frame::boolean(2)));
  }
  SECTION("matches the brute-force partition oracle up to 6 elements") {
    for (const auto& L : small_frames()) {
      if (L->size() > 6) continue;
      auto cl = congruence_lattice(L);
      auto oracle = all_congruences_bruteforce(L);
      REQUIRE(cl.elements.size() == oracle.size());
      for (const Congruence& c : oracle)
        REQUIRE(cl.index_of(c) >= 0);
      // the frame order is congruence inclusion
      for (std::size_t i = 0; i < cl.elements.size(); ++i)
        for (std::size_t k = 0; k < cl.elements.size(); ++k)
          REQUIRE(cl.frame->leq(static_cast<int>(i), static_cast<int>(k)) ==
                  cl.elements[i].refines(cl.elements[k]));
    }
  }
  SECTION("meets are intersections, joins are closures") {
    auto L = Frame::boolean(2);
    auto cl = congruence_lattice(L);
    for (std::size_t i = 0; i < cl.elements.size(); ++i)
      for (std::size_t k = 0; k < cl.elements.size(); ++k) {
        int m = cl.frame->meet(static_cast<int>(i), static_cast<int>(k));
        int j = cl.frame->join(static_cast<int>(i), static_cast<int>(k));
        REQUIRE(cl.elements[m] == congruence_meet(cl.elements[i], cl.elements[k]));
        REQUIRE(cl.elements[j] == congruence_join(cl.elements[i], cl.elements[k]));
      }
  }
}

TEST_CASE("nabla and delta") {
  SECTION("boundary cases") {
    for (const auto& L : small_frames()) {
      REQUIRE(nabla(L, L->bot()) == Congruence::diagonal(L));
      REQUIRE(delta(L, L->top()) == Congruence::diagonal(L));
      REQUIRE(nabla(L, L->top()) == Congruence::total(L));
      REQUIRE(delta(L, L->bot()) == Congruence::total(L));
    }
  }
  SECTION("complementation in the congruence lattice, all frames up to 6 elements") {
    for (const auto& L : small_frames()) {
      if (L->size() > 6) continue;
      for (int x = 0; x < L->size(); ++x) {
        auto pc = principal_congruences(L, x);
        REQUIRE(congruence_meet(pc.nabla, pc.delta) == Congruence::diagonal(L));
        REQUIRE(congruence_join(pc.nabla, pc.delta) == Congruence::total(L));
      }
    }
  }
  SECTION("nabla is a frame injection into the congruence lattice") {
    for (const auto& L : small_frames()) {
      if (L->size() > 6) continue;
      auto cl = congruence_lattice(L);
      FrameMap embed{L, cl.frame, std::vector<int>(L->size(), -1)};
      for (int x = 0; x < L->size(); ++x) embed.img[x] = cl.index_of(nabla(L, x));
      REQUIRE(embed.preserves_structure());
      REQUIRE(embed.injective());
    }
  }
  SECTION("delta reverses finite meets and joins") {
    for (const auto& L : small_frames()) {
      if (L->size() > 6) continue;
      for (int x = 0; x < L->size(); ++x)
        for (int y = 0; y < L->size(); ++y) {
          REQUIRE(delta(L, L->join(x, y)) == congruence_meet(delta(L, x), delta(L, y)));
          REQUIRE(delta(L, L->meet(x, y)) == congruence_join(delta(L, x), delta(L, y)));
        }
    }
  }
}

TEST_CASE("induced maps between quotients") {
  // a frame map respecting the relations induces a unique map of quotients
  // making the square commute
  auto L = Frame::boolean(2);
  auto M = Frame::chain(3);
  for (const FrameMap& f : enumerate_frame_maps(L, M)) {
    Relation r{L, {{1, 2}}};
    Relation s{M, {{f.img[1], f.img[2]}}};
    Congruence cr = congruence_closure(L, r);
    Congruence cs = congruence_closure(M, s);
    auto qL = quotient(L, cr);
    auto qM = quotient(M, cs);
    // induced map: [x] ↦ [f(x)]; well-defined because f respects r
    FrameMap induced{qL.frame, qM.frame, std::vector<int>(qL.frame->size(), -1)};
    bool well_defined = true;
    for (int e = 0; e < L->size(); ++e) {
      int src = qL.q(e), dst = qM.q(f.img[e]);
      if (induced.img[src] >= 0 && induced.img[src] != dst) well_defined = false;
      induced.img[src] = dst;
    }
    REQUIRE(well_defined);
    REQUIRE(induced.preserves_structure());
    REQUIRE(compose(induced, qL.q) == compose(qM.q, f));
    // uniqueness: no other quotient map commutes
    int commuting = 0;
    for (const FrameMap& h : enumerate_frame_maps(qL.frame, qM.frame))
      if (compose(h, qL.q) == compose(qM.q, f)) ++commuting;
    REQUIRE(commuting == 1);
  }
}
