#ifndef BIFRM_DUALITY_HPP
#define BIFRM_DUALITY_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bifrm/biframe.hpp"
#include "bifrm/bispace.hpp"
#include "bifrm/core.hpp"
#include "bifrm/dframe.hpp"
#include "bifrm/frame.hpp"

namespace bifrm {

// A frame built from a topology, remembering which open each element is.
struct TopFrame {
  FramePtr frame;
  std::vector<PointSet> open_of;  // per frame element

  int index_of_open(PointSet u) const {
    for (std::size_t e = 0; e < open_of.size(); ++e)
      if (open_of[e] == u) return static_cast<int>(e);
    return -1;
  }
};

inline TopFrame top_frame(int npoints, const std::vector<PointSet>& family,
                          const std::vector<std::string>& point_labels = {}) {
  const PointSet full = full_set(npoints);
  std::vector<PointSet> minn(npoints, full);
  for (int x = 0; x < npoints; ++x)
    for (PointSet u : family)
      if ((u >> x) & 1) minn[x] &= u;
  std::vector<PointSet> gens = minn;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() > 64) throw SizeCapExceeded("topology with more than 64 join-irreducibles");
  std::vector<std::uint64_t> masks;
  std::vector<std::string> labels;
  for (PointSet u : family) {
    std::uint64_t m = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if ((gens[g] & ~u) == 0) m |= (1ull << g);
    masks.push_back(m);
    std::string s = "{";
    bool first = true;
    for (int x = 0; x < npoints; ++x)
      if ((u >> x) & 1) {
        if (!first) s += ",";
        s += point_labels.empty() ? std::to_string(x) : point_labels[x];
        first = false;
      }
    labels.push_back(s + "}");
  }
  TopFrame out;
  out.frame = Frame::from_masks(masks, static_cast<int>(gens.size()), labels);
  if (out.frame->size() != static_cast<int>(family.size()))
    throw InputError("family is not determined by neighborhoods (not a topology?)");
  out.open_of.assign(family.size(), 0);
  for (std::size_t i = 0; i < family.size(); ++i)
    out.open_of[out.frame->element_with_mask(masks[i])] = family[i];
  return out;
}

// --- the three open-set functors -------------------------------------------

struct BOmegaResult {
  BiframePtr biframe;
  TopFrame omega_p, omega_m, omega_patch;
};

// (Ω+(X), Ω-(X), Ω(X)) with set inclusions as injections.
inline BOmegaResult b_omega(const Bispace& x) {
  BOmegaResult out;
  out.omega_p = top_frame(x.size(), x.tauP(), x.labels());
  out.omega_m = top_frame(x.size(), x.tauM(), x.labels());
  out.omega_patch = top_frame(x.size(), patch(x), x.labels());
  auto incl = [&](const TopFrame& side) {
    FrameMap m{side.frame, out.omega_patch.frame,
               std::vector<int>(side.frame->size(), -1)};
    for (int e = 0; e < side.frame->size(); ++e)
      m.img[e] = out.omega_patch.index_of_open(side.open_of[e]);
    return m;
  };
  out.biframe = Biframe::make(out.omega_p.frame, out.omega_m.frame, out.omega_patch.frame,
                              incl(out.omega_p), incl(out.omega_m));
  return out;
}

struct BOmegaFinResult {
  BiframePtr biframe;
  TopFrame omega_p, omega_m;
};

// (Ω+(X), Ω-(X), (Ω+ ⊕ Ω-)/R) with R the inclusions U+ ∩ U- ⊆ V+ ∪ V-.
inline BOmegaFinResult b_omega_fin(const Bispace& x, const Caps& caps = Caps::global()) {
  BOmegaFinResult out;
  out.omega_p = top_frame(x.size(), x.tauP(), x.labels());
  out.omega_m = top_frame(x.size(), x.tauM(), x.labels());
  CoproductResult cp = coproduct(out.omega_p.frame, out.omega_m.frame, caps);
  Relation r{cp.frame, {}};
  const auto& tp = out.omega_p.open_of;
  const auto& tm = out.omega_m.open_of;
  for (std::size_t a = 0; a < tp.size(); ++a)
    for (std::size_t b = 0; b < tm.size(); ++b)
      for (std::size_t c = 0; c < tp.size(); ++c)
        for (std::size_t d = 0; d < tm.size(); ++d)
          if ((tp[a] & tm[b] & ~(tp[c] | tm[d])) == 0)
            r.pairs.push_back({cp.frame->meet(cp.inj_a.img[a], cp.inj_b.img[b]),
                               cp.frame->join(cp.inj_a.img[c], cp.inj_b.img[d])});
  Congruence c = congruence_closure(cp.frame, r);
  out.biframe = presented_biframe_over(cp, out.omega_p.frame, out.omega_m.frame, c);
  return out;
}

struct DOmegaResult {
  DFramePtr dframe;
  TopFrame omega_p, omega_m;
};

// (Ω+(X), Ω-(X), disjoint pairs, covering pairs).
inline DOmegaResult d_omega(const Bispace& x) {
  DOmegaResult out;
  out.omega_p = top_frame(x.size(), x.tauP(), x.labels());
  out.omega_m = top_frame(x.size(), x.tauM(), x.labels());
  std::vector<std::pair<int, int>> con, tot;
  const PointSet full = full_set(x.size());
  for (int a = 0; a < out.omega_p.frame->size(); ++a)
    for (int b = 0; b < out.omega_m.frame->size(); ++b) {
      if ((out.omega_p.open_of[a] & out.omega_m.open_of[b]) == 0) con.push_back({a, b});
      if ((out.omega_p.open_of[a] | out.omega_m.open_of[b]) == full) tot.push_back({a, b});
    }
  out.dframe = DFrame::make(out.omega_p.frame, out.omega_m.frame, con, tot,
                            /*normalize=*/false);
  return out;
}

// --- units ----------------------------------------------------------------

enum class Duality { biframe, finitary, dframe };

// Unit x ↦ (N+_x, N-_x) into the spectrum of the chosen open-set functor.
// Always bicontinuous; asserted here.
struct UnitResult {
  BispaceMap unit;
  BispacePtr spectrum;
};

namespace detail {

// index of the neighborhood point pair (N+_x, N-_x) among component points
template <typename Spec>
int neighborhood_pair_index(int pt, const TopFrame& op, const TopFrame& om, const Spec& s) {
  int ip = -1, im = -1;
  for (std::size_t i = 0; i < s.pts_p.size(); ++i) {
    bool match = true;
    for (int e = 0; e < op.frame->size() && match; ++e)
      if (s.pts_p[i].img[e] != (((op.open_of[e] >> pt) & 1) ? 1 : 0)) match = false;
    if (match) { ip = static_cast<int>(i); break; }
  }
  for (std::size_t j = 0; j < s.pts_m.size(); ++j) {
    bool match = true;
    for (int e = 0; e < om.frame->size() && match; ++e)
      if (s.pts_m[j].img[e] != (((om.open_of[e] >> pt) & 1) ? 1 : 0)) match = false;
    if (match) { im = static_cast<int>(j); break; }
  }
  if (ip < 0 || im < 0) throw std::logic_error("neighborhood maps are not component points");
  for (std::size_t k = 0; k < s.pairs.size(); ++k)
    if (s.pairs[k] == std::make_pair(ip, im)) return static_cast<int>(k);
  return -1;
}

}  // namespace detail

inline UnitResult unit_map(const BispacePtr& x, Duality which,
                           const Caps& caps = Caps::global()) {
  UnitResult out;
  std::vector<int> fn(x->size(), -1);
  if (which == Duality::biframe) {
    BOmegaResult bo = b_omega(*x);
    Spectrum s = bipoints(bo.biframe, caps);
    for (int p = 0; p < x->size(); ++p)
      fn[p] = detail::neighborhood_pair_index(p, bo.omega_p, bo.omega_m, s);
    out.spectrum = s.space;
  } else if (which == Duality::finitary) {
    BOmegaFinResult bo = b_omega_fin(*x, caps);
    Spectrum s = bipoints(bo.biframe, caps);
    for (int p = 0; p < x->size(); ++p)
      fn[p] = detail::neighborhood_pair_index(p, bo.omega_p, bo.omega_m, s);
    out.spectrum = s.space;
  } else {
    DOmegaResult dd = d_omega(*x);
    DSpectrum s = dpoints(dd.dframe, caps);
    for (int p = 0; p < x->size(); ++p)
      fn[p] = detail::neighborhood_pair_index(p, dd.omega_p, dd.omega_m, s);
    out.spectrum = s.space;
  }
  for (int v : fn)
    if (v < 0) throw std::logic_error("neighborhood pair is not a spectrum point");
  out.unit = BispaceMap{x, out.spectrum, fn};
  if (!out.unit.bicontinuous()) throw std::logic_error("unit map is not bicontinuous");
  return out;
}

// --- sobriety ----------------------------------------------------------------

struct SobrietyFlags {
  bool patch_sober;  // biframe-duality unit is a bihomeomorphism
  bool bi_sober;     // finitary unit is a bihomeomorphism
  bool d_sober;      // d-frame unit is a bihomeomorphism
};

inline SobrietyFlags sobriety(const BispacePtr& x, const Caps& caps = Caps::global()) {
  SobrietyFlags f{};
  f.patch_sober = unit_map(x, Duality::biframe, caps).unit.is_bihomeomorphism();
  f.bi_sober = unit_map(x, Duality::finitary, caps).unit.is_bihomeomorphism();
  f.d_sober = unit_map(x, Duality::dframe, caps).unit.is_bihomeomorphism();
  if (f.d_sober && !f.bi_sober)
    throw std::logic_error("sobriety chain violated: d-sober but not bisober");
  if (f.bi_sober && !f.patch_sober)
    throw std::logic_error("sobriety chain violated: bisober but not patch-sober");
  return f;
}

// --- spatialization ------------------------------------------------------------

struct SpatializationResult {
  Spectrum spectrum;
  BiframePtr image;        // finitary biframe of opens of the spectrum
  BiframeMap phi;          // B → image
  bool bispatial;
};

inline SpatializationResult spatialization(const BiframePtr& b,
                                           const Caps& caps = Caps::global()) {
  SpatializationResult out{bipoints(b, caps), nullptr, {}, false};
  BOmegaFinResult img = b_omega_fin(*out.spectrum.space, caps);
  out.image = img.biframe;
  FrameMap fp{b->lp(), img.omega_p.frame, std::vector<int>(b->lp()->size(), -1)};
  FrameMap fm{b->lm(), img.omega_m.frame, std::vector<int>(b->lm()->size(), -1)};
  for (int a = 0; a < b->lp()->size(); ++a)
    fp.img[a] = img.omega_p.index_of_open(out.spectrum.phi_p[a]);
  for (int a = 0; a < b->lm()->size(); ++a)
    fm.img[a] = img.omega_m.index_of_open(out.spectrum.phi_m[a]);
  auto phi = try_biframe_map(b, out.image, fp, fm);
  if (!phi) throw std::logic_error("spatialization is not a biframe map");
  out.phi = *phi;
  out.bispatial = out.phi.is_isomorphism();
  return out;
}

}  // namespace bifrm

#endif  // BIFRM_DUALITY_HPP
