#ifndef BIFRM_DFRAME_HPP
#define BIFRM_DFRAME_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bifrm/biframe.hpp"
#include "bifrm/bispace.hpp"
#include "bifrm/core.hpp"
#include "bifrm/frame.hpp"

namespace bifrm {

class DFrame;
using DFramePtr = std::shared_ptr<const DFrame>;

// Quadruple (L+, L-, con, tot): con a downset closed under homogeneous joins,
// tot an upset closed under finite homogeneous meets, and the two balanced.
// con/tot are membership matrices indexed by (a+, a-).
class DFrame : public std::enable_shared_from_this<DFrame> {
 public:
  struct NormalizationReport {
    std::vector<std::pair<int, int>> added_con;
    std::vector<std::pair<int, int>> added_tot;
  };

  // `normalize` applies the closure axioms (1)-(4) and records what was
  // added; balance is never forced, only reported by validate().
  static DFramePtr make(FramePtr lp, FramePtr lm,
                        const std::vector<std::pair<int, int>>& con_pairs,
                        const std::vector<std::pair<int, int>>& tot_pairs,
                        bool normalize = true, NormalizationReport* report = nullptr) {
    auto d = std::shared_ptr<DFrame>(new DFrame());
    d->lp_ = std::move(lp);
    d->lm_ = std::move(lm);
    d->con_.assign(static_cast<std::size_t>(d->lp_->size()) * d->lm_->size(), false);
    d->tot_ = d->con_;
    for (auto& [a, b] : con_pairs) {
      if (a < 0 || a >= d->lp_->size() || b < 0 || b >= d->lm_->size())
        throw ElementNotInFrame("con pair outside the component frames");
      d->con_at(a, b) = true;
    }
    for (auto& [a, b] : tot_pairs) {
      if (a < 0 || a >= d->lp_->size() || b < 0 || b >= d->lm_->size())
        throw ElementNotInFrame("tot pair outside the component frames");
      d->tot_at(a, b) = true;
    }
    std::vector<bool> before_con = d->con_, before_tot = d->tot_;
    if (normalize) {
      d->normalize_con();
      d->normalize_tot();
      if (report) {
        for (int a = 0; a < d->lp_->size(); ++a)
          for (int b = 0; b < d->lm_->size(); ++b) {
            if (d->con(a, b) && !before_con[d->idx(a, b)]) report->added_con.push_back({a, b});
            if (d->tot(a, b) && !before_tot[d->idx(a, b)]) report->added_tot.push_back({a, b});
          }
      }
    }
    return d;
  }

  // the d-frame 2 = (2, 2, {(a,b) : a ∧ b = 0}, {(a,b) : a ∨ b = 1})
  static DFramePtr two() {
    return make(Frame::two(), Frame::two(), {{0, 0}, {0, 1}, {1, 0}}, {{1, 1}, {1, 0}, {0, 1}});
  }

  const FramePtr& lp() const { return lp_; }
  const FramePtr& lm() const { return lm_; }
  bool con(int a, int b) const { return con_[idx(a, b)]; }
  bool tot(int a, int b) const { return tot_[idx(a, b)]; }

  std::vector<std::pair<int, int>> con_pairs() const { return collect(con_); }
  std::vector<std::pair<int, int>> tot_pairs() const { return collect(tot_); }

  ValidationReport validate() const {
    ValidationReport rep;
    const int np = lp_->size(), nm = lm_->size();
    for (int a = 0; a < np; ++a)
      for (int b = 0; b < nm; ++b) {
        if (con(a, b)) {
          for (int c = 0; c < np; ++c)
            for (int d = 0; d < nm; ++d)
              if (lp_->leq(c, a) && lm_->leq(d, b) && !con(c, d))
                rep.fail("axiom 1: con not a downset at (" + lp_->label(a) + "," +
                         lm_->label(b) + ")");
        }
        if (tot(a, b)) {
          for (int c = 0; c < np; ++c)
            for (int d = 0; d < nm; ++d)
              if (lp_->leq(a, c) && lm_->leq(b, d) && !tot(c, d))
                rep.fail("axiom 3: tot not an upset at (" + lp_->label(a) + "," +
                         lm_->label(b) + ")");
        }
      }
    for (int a = 0; a < np; ++a)
      for (int b1 = 0; b1 < nm; ++b1)
        for (int b2 = 0; b2 < nm; ++b2) {
          if (con(a, b1) && con(a, b2) && !con(a, lm_->join(b1, b2)))
            rep.fail("axiom 2: con not closed under joins in the negative coordinate");
          if (tot(a, b1) && tot(a, b2) && !tot(a, lm_->meet(b1, b2)))
            rep.fail("axiom 4: tot not closed under meets in the negative coordinate");
        }
    for (int b = 0; b < nm; ++b)
      for (int a1 = 0; a1 < np; ++a1)
        for (int a2 = 0; a2 < np; ++a2) {
          if (con(a1, b) && con(a2, b) && !con(lp_->join(a1, a2), b))
            rep.fail("axiom 2: con not closed under joins in the positive coordinate");
          if (tot(a1, b) && tot(a2, b) && !tot(lp_->meet(a1, a2), b))
            rep.fail("axiom 4: tot not closed under meets in the positive coordinate");
        }
    for (int a = 0; a < np; ++a)
      for (int b1 = 0; b1 < nm; ++b1)
        for (int b2 = 0; b2 < nm; ++b2)
          if (con(a, b1) && tot(a, b2) && !lm_->leq(b1, b2))
            rep.fail("axiom 5 (balance): con (" + lp_->label(a) + "," + lm_->label(b1) +
                     ") and tot (" + lp_->label(a) + "," + lm_->label(b2) + ") but " +
                     lm_->label(b1) + " ≰ " + lm_->label(b2));
    for (int b = 0; b < nm; ++b)
      for (int a1 = 0; a1 < np; ++a1)
        for (int a2 = 0; a2 < np; ++a2)
          if (con(a1, b) && tot(a2, b) && !lp_->leq(a1, a2))
            rep.fail("axiom 5 (balance): con (" + lp_->label(a1) + "," + lm_->label(b) +
                     ") and tot (" + lp_->label(a2) + "," + lm_->label(b) + ") but " +
                     lp_->label(a1) + " ≰ " + lp_->label(a2));
    return rep;
  }

  friend bool operator==(const DFrame& x, const DFrame& y) {
    return structurally_equal(*x.lp_, *y.lp_) && structurally_equal(*x.lm_, *y.lm_) &&
           x.con_ == y.con_ && x.tot_ == y.tot_;
  }

 private:
  FramePtr lp_, lm_;
  std::vector<bool> con_, tot_;

  DFrame() = default;

  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * lm_->size() + b; }
  std::vector<bool>::reference con_at(int a, int b) { return con_[idx(a, b)]; }
  std::vector<bool>::reference tot_at(int a, int b) { return tot_[idx(a, b)]; }

  std::vector<std::pair<int, int>> collect(const std::vector<bool>& m) const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < lp_->size(); ++a)
      for (int b = 0; b < lm_->size(); ++b)
        if (m[idx(a, b)]) out.push_back({a, b});
    return out;
  }

  void normalize_con() {
    bool grew = true;
    while (grew) {
      grew = false;
      // downset closure
      for (int a = 0; a < lp_->size(); ++a)
        for (int b = 0; b < lm_->size(); ++b) {
          if (!con(a, b)) continue;
          for (int c = 0; c < lp_->size(); ++c)
            for (int d = 0; d < lm_->size(); ++d)
              if (lp_->leq(c, a) && lm_->leq(d, b) && !con(c, d)) {
                con_at(c, d) = true;
                grew = true;
              }
        }
      // homogeneous join saturation (all joins are finite here)
      for (int a = 0; a < lp_->size(); ++a)
        for (int b1 = 0; b1 < lm_->size(); ++b1)
          for (int b2 = 0; b2 < lm_->size(); ++b2)
            if (con(a, b1) && con(a, b2) && !con(a, lm_->join(b1, b2))) {
              con_at(a, lm_->join(b1, b2)) = true;
              grew = true;
            }
      for (int b = 0; b < lm_->size(); ++b)
        for (int a1 = 0; a1 < lp_->size(); ++a1)
          for (int a2 = 0; a2 < lp_->size(); ++a2)
            if (con(a1, b) && con(a2, b) && !con(lp_->join(a1, a2), b)) {
              con_at(lp_->join(a1, a2), b) = true;
              grew = true;
            }
    }
  }

  void normalize_tot() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < lp_->size(); ++a)
        for (int b = 0; b < lm_->size(); ++b) {
          if (!tot(a, b)) continue;
          for (int c = 0; c < lp_->size(); ++c)
            for (int d = 0; d < lm_->size(); ++d)
              if (lp_->leq(a, c) && lm_->leq(b, d) && !tot(c, d)) {
                tot_at(c, d) = true;
                grew = true;
              }
        }
      for (int a = 0; a < lp_->size(); ++a)
        for (int b1 = 0; b1 < lm_->size(); ++b1)
          for (int b2 = 0; b2 < lm_->size(); ++b2)
            if (tot(a, b1) && tot(a, b2) && !tot(a, lm_->meet(b1, b2))) {
              tot_at(a, lm_->meet(b1, b2)) = true;
              grew = true;
            }
      for (int b = 0; b < lm_->size(); ++b)
        for (int a1 = 0; a1 < lp_->size(); ++a1)
          for (int a2 = 0; a2 < lp_->size(); ++a2)
            if (tot(a1, b) && tot(a2, b) && !tot(lp_->meet(a1, a2), b)) {
              tot_at(lp_->meet(a1, a2), b) = true;
              grew = true;
            }
    }
  }
};

// con = disjoint generator pairs, tot = covering generator pairs.
inline DFramePtr delta_functor(const BiframePtr& b) {
  const Frame& L = *b->l();
  std::vector<std::pair<int, int>> con, tot;
  for (int a = 0; a < b->lp()->size(); ++a)
    for (int c = 0; c < b->lm()->size(); ++c) {
      if (L.meet(b->ep().img[a], b->em().img[c]) == L.bot()) con.push_back({a, c});
      if (L.join(b->ep().img[a], b->em().img[c]) == L.top()) tot.push_back({a, c});
    }
  return DFrame::make(b->lp(), b->lm(), con, tot, /*normalize=*/false);
}

// Presented biframe over the relation {x+ ∧ x- ≤ 0 : con} ∪ {1 ≤ x+ ∨ x- : tot}.
inline BiframePtr gamma_functor(const DFramePtr& d, const Caps& caps = Caps::global()) {
  CoproductResult cp = coproduct(d->lp(), d->lm(), caps);
  Relation r{cp.frame, {}};
  for (auto& [a, b] : d->con_pairs())
    r.pairs.push_back({cp.frame->meet(cp.inj_a.img[a], cp.inj_b.img[b]), cp.frame->bot()});
  for (auto& [a, b] : d->tot_pairs())
    r.pairs.push_back({cp.frame->top(), cp.frame->join(cp.inj_a.img[a], cp.inj_b.img[b])});
  Congruence c = congruence_closure(cp.frame, r);
  return presented_biframe_over(cp, d->lp(), d->lm(), c);
}

// d-spectrum: pairs of component points respecting con and tot.
struct DSpectrum {
  BispacePtr space;
  std::vector<FrameMap> pts_p, pts_m;
  std::vector<std::pair<int, int>> pairs;
  std::vector<PointSet> phi_p, phi_m;
};

inline DSpectrum dpoints(const DFramePtr& d, const Caps& caps = Caps::global()) {
  DSpectrum s;
  s.pts_p = points(d->lp(), caps);
  s.pts_m = points(d->lm(), caps);
  for (std::size_t i = 0; i < s.pts_p.size(); ++i)
    for (std::size_t j = 0; j < s.pts_m.size(); ++j) {
      const FrameMap& fp = s.pts_p[i];
      const FrameMap& fm = s.pts_m[j];
      bool ok = true;
      for (int a = 0; a < d->lp()->size() && ok; ++a)
        for (int b = 0; b < d->lm()->size() && ok; ++b) {
          if (d->con(a, b) && fp.img[a] == 1 && fm.img[b] == 1) ok = false;
          if (d->tot(a, b) && fp.img[a] == 0 && fm.img[b] == 0) ok = false;
        }
      if (ok) s.pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  const int npts = static_cast<int>(s.pairs.size());
  if (npts > caps.max_points)
    throw SizeCapExceeded("d-spectrum has " + std::to_string(npts) + " points");
  s.phi_p.assign(d->lp()->size(), 0);
  s.phi_m.assign(d->lm()->size(), 0);
  for (int k = 0; k < npts; ++k) {
    for (int a = 0; a < d->lp()->size(); ++a)
      if (s.pts_p[s.pairs[k].first].img[a] == 1) s.phi_p[a] |= (1u << k);
    for (int a = 0; a < d->lm()->size(); ++a)
      if (s.pts_m[s.pairs[k].second].img[a] == 1) s.phi_m[a] |= (1u << k);
  }
  std::vector<PointSet> tp(s.phi_p.begin(), s.phi_p.end());
  std::vector<PointSet> tm(s.phi_m.begin(), s.phi_m.end());
  std::vector<std::string> labels;
  for (int k = 0; k < npts; ++k)
    labels.push_back("(f" + std::to_string(s.pairs[k].first) + ",g" +
                     std::to_string(s.pairs[k].second) + ")");
  s.space = std::make_shared<Bispace>(npts, tp, tm, labels);
  return s;
}

}  // namespace bifrm

#endif  // BIFRM_DFRAME_HPP
