#ifndef BIFRM_ASSEMBLY_HPP
#define BIFRM_ASSEMBLY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bifrm/biframe.hpp"
#include "bifrm/congruence.hpp"
#include "bifrm/core.hpp"
#include "bifrm/duality.hpp"
#include "bifrm/frame.hpp"

namespace bifrm {

// Congruences on the main component are handled in the subset encoding of the
// congruence lattice (one bit per join-irreducible of L); nabla/delta land
// there through the definitional closure computation.
namespace assembly_detail {

inline std::uint64_t nabla_subset(const FramePtr& l, int x) {
  return congruence_subset(nabla(l, x));
}
inline std::uint64_t delta_subset(const FramePtr& l, int x) {
  return congruence_subset(delta(l, x));
}

// subframe closure inside the congruence lattice: AND/OR saturation
inline std::vector<std::uint64_t> subframe_closure(std::vector<std::uint64_t> gens,
                                                   std::uint64_t bottom,
                                                   std::uint64_t top) {
  gens.push_back(bottom);
  gens.push_back(top);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::uint64_t> out = gens;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (std::size_t k = 0; k <= head; ++k) {
      for (std::uint64_t candidate : {out[head] & out[k], out[head] | out[k]}) {
        if (std::find(out.begin(), out.end(), candidate) == out.end())
          out.push_back(candidate);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline FramePtr frame_of_subsets(const std::vector<std::uint64_t>& subsets, int bits,
                                 const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (std::uint64_t s : subsets) labels.push_back(prefix + std::to_string(s));
  return Frame::from_masks(subsets, bits, labels);
}

}  // namespace assembly_detail

// The finitary assembly A_fin(L): subframe of the congruence lattice generated
// by all closed congruences and the open congruences of finitary elements.
// All four generator descriptions are computed and asserted equal.
struct FinitaryAssembly {
  FramePtr frame;                        // one element per congruence, ordered by inclusion
  std::vector<std::uint64_t> subset_of;  // subset encoding per element
  std::vector<Congruence> congruence_of; // concrete congruence per element
  bool equals_full_congruence_lattice;   // finite-scale collapse, logged by callers

  int index_of_subset(std::uint64_t s) const { return frame->element_with_mask(s); }
};

inline FinitaryAssembly finitary_assembly(const BiframePtr& b,
                                          const Caps& caps = Caps::global()) {
  using namespace assembly_detail;
  const FramePtr& L = b->l();
  if ((1ll << L->jcount()) > caps.max_frame)
    throw SizeCapExceeded("assembly would have 2^" + std::to_string(L->jcount()) +
                          " congruences");
  const int bits = L->jcount();
  const std::uint64_t full = bits == 64 ? ~0ull : ((1ull << bits) - 1);
  std::vector<int> fin = b->finitary_elements();

  // description A (the definition): nabla of everything, delta of finitary
  std::vector<std::uint64_t> gens_a;
  for (int x = 0; x < L->size(); ++x) gens_a.push_back(nabla_subset(L, x));
  for (int f : fin) gens_a.push_back(delta_subset(L, f));
  std::vector<std::uint64_t> closure_a = subframe_closure(gens_a, 0, 0);

  // description B: nabla of everything, delta of joins e+(x+) ∨ e-(x-)
  std::vector<std::uint64_t> gens_b;
  for (int x = 0; x < L->size(); ++x) gens_b.push_back(nabla_subset(L, x));
  for (int a = 0; a < b->lp()->size(); ++a)
    for (int c = 0; c < b->lm()->size(); ++c)
      gens_b.push_back(delta_subset(L, L->join(b->ep().img[a], b->em().img[c])));
  std::vector<std::uint64_t> closure_b = subframe_closure(gens_b, 0, 0);

  // description C: nabla and delta of component images only
  std::vector<std::uint64_t> gens_c;
  for (int a = 0; a < b->lp()->size(); ++a) {
    gens_c.push_back(nabla_subset(L, b->ep().img[a]));
    gens_c.push_back(delta_subset(L, b->ep().img[a]));
  }
  for (int c = 0; c < b->lm()->size(); ++c) {
    gens_c.push_back(nabla_subset(L, b->em().img[c]));
    gens_c.push_back(delta_subset(L, b->em().img[c]));
  }
  std::vector<std::uint64_t> closure_c = subframe_closure(gens_c, 0, 0);

  // description D: joins of nabla(e+(x) ∧ e-(x')) ∩ delta(e+(y) ∨ e-(y'))
  std::vector<std::uint64_t> basics = {0};
  for (int a = 0; a < b->lp()->size(); ++a)
    for (int c = 0; c < b->lm()->size(); ++c) {
      std::uint64_t nab = nabla_subset(L, L->meet(b->ep().img[a], b->em().img[c]));
      for (int a2 = 0; a2 < b->lp()->size(); ++a2)
        for (int c2 = 0; c2 < b->lm()->size(); ++c2) {
          std::uint64_t del = delta_subset(L, L->join(b->ep().img[a2], b->em().img[c2]));
          basics.push_back(nab & del);
        }
    }
  std::set<std::uint64_t> closure_d_set(basics.begin(), basics.end());
  {
    std::vector<std::uint64_t> work(closure_d_set.begin(), closure_d_set.end());
    for (std::size_t head = 0; head < work.size(); ++head)
      for (std::size_t k = 0; k <= head; ++k) {
        std::uint64_t j = work[head] | work[k];
        if (closure_d_set.insert(j).second) work.push_back(j);
      }
  }
  std::vector<std::uint64_t> closure_d(closure_d_set.begin(), closure_d_set.end());

  if (closure_a != closure_b || closure_a != closure_c || closure_a != closure_d)
    throw std::logic_error("finitary assembly generator descriptions disagree");

  FinitaryAssembly out;
  out.frame = assembly_detail::frame_of_subsets(closure_a, bits, "C");
  out.subset_of.resize(closure_a.size());
  out.congruence_of.resize(closure_a.size());
  for (int e = 0; e < out.frame->size(); ++e) {
    std::uint64_t s = out.frame->mask(e);  // from_masks keeps the subset values
    out.subset_of[e] = s;
    std::uint64_t bits = L->jbits_of_subset(s);
    std::vector<int> cls(L->size());
    std::map<std::uint64_t, int> remap;
    for (int x = 0; x < L->size(); ++x) {
      auto [it, fresh] = remap.emplace(L->mask(x) & ~bits, static_cast<int>(remap.size()));
      cls[x] = it->second;
    }
    out.congruence_of[e] = Congruence(L, std::move(cls));
  }
  out.equals_full_congruence_lattice =
      static_cast<std::uint64_t>(out.frame->size()) == (1ull << bits) || full == 0;
  return out;
}

// A(L) = (A_{∇+Δ-}(L), A_{∇-Δ+}(L), A_fin(L)) with the nabla embedding.
struct AssemblyBiframe {
  BiframePtr base;
  BiframePtr biframe;
  FinitaryAssembly main;
  std::vector<std::uint64_t> ap_subsets, am_subsets;  // per component element
  BiframeMap nabla_embed;
};

inline AssemblyBiframe biframe_assembly(const BiframePtr& b,
                                        const Caps& caps = Caps::global()) {
  using namespace assembly_detail;
  AssemblyBiframe out;
  out.base = b;
  out.main = finitary_assembly(b, caps);
  const FramePtr& L = b->l();
  const int bits = L->jcount();

  std::vector<std::uint64_t> gens_p, gens_m;
  for (int a = 0; a < b->lp()->size(); ++a) {
    gens_p.push_back(nabla_subset(L, b->ep().img[a]));
    gens_m.push_back(delta_subset(L, b->ep().img[a]));
  }
  for (int c = 0; c < b->lm()->size(); ++c) {
    gens_m.push_back(nabla_subset(L, b->em().img[c]));
    gens_p.push_back(delta_subset(L, b->em().img[c]));
  }
  out.ap_subsets = subframe_closure(gens_p, 0, 0);
  out.am_subsets = subframe_closure(gens_m, 0, 0);
  FramePtr ap = frame_of_subsets(out.ap_subsets, bits, "P");
  FramePtr am = frame_of_subsets(out.am_subsets, bits, "M");
  for (int e = 0; e < ap->size(); ++e) out.ap_subsets[e] = ap->mask(e);
  for (int e = 0; e < am->size(); ++e) out.am_subsets[e] = am->mask(e);

  auto incl = [&](const FramePtr& side, const std::vector<std::uint64_t>& subsets) {
    FrameMap m{side, out.main.frame, std::vector<int>(side->size(), -1)};
    for (int e = 0; e < side->size(); ++e) m.img[e] = out.main.index_of_subset(subsets[e]);
    return m;
  };
  out.biframe = Biframe::make(ap, am, out.main.frame, incl(ap, out.ap_subsets),
                              incl(am, out.am_subsets));

  FrameMap fp{b->lp(), ap, std::vector<int>(b->lp()->size(), -1)};
  for (int a = 0; a < b->lp()->size(); ++a)
    fp.img[a] = ap->element_with_mask(nabla_subset(L, b->ep().img[a]));
  FrameMap fm{b->lm(), am, std::vector<int>(b->lm()->size(), -1)};
  for (int c = 0; c < b->lm()->size(); ++c)
    fm.img[c] = am->element_with_mask(nabla_subset(L, b->em().img[c]));
  auto embed = try_biframe_map(b, out.biframe, fp, fm);
  if (!embed) throw std::logic_error("nabla embedding is not a biframe map");
  out.nabla_embed = *embed;
  if (!out.nabla_embed.fp.injective() || !out.nabla_embed.fm.injective() ||
      !out.nabla_embed.witness.injective())
    throw std::logic_error("nabla embedding is not injective");
  // nabla and delta of each generator are complements in the main component
  for (int a = 0; a < b->lp()->size(); ++a) {
    std::uint64_t nab = nabla_subset(L, b->ep().img[a]);
    std::uint64_t del = delta_subset(L, b->ep().img[a]);
    if ((nab & del) != 0 || out.main.index_of_subset(nab | del) != out.main.frame->top())
      throw std::logic_error("nabla/delta complementation fails in the assembly");
  }
  return out;
}

// Frame of filters ordered by inclusion, i.e. the ideal completion of the
// order dual; the principal embedding x ↦ ↑x reverses the order, matching how
// open congruences Δ(x) sit in the assembly. Every filter of a finite lattice
// is principal (it contains the meet of its members), so the carrier is the
// order dual of L; the brute-force subset oracle in the tests pins this down.
struct FilterCompletion {
  FramePtr frame;
  std::vector<int> generator_of;  // frame element -> x with the filter ↑x
  std::vector<int> up_of;         // x -> frame element ↑x
};

inline FilterCompletion filter_completion(const FramePtr& l) {
  const int bits = l->jcount();
  const std::uint64_t full = bits == 64 ? ~0ull : ((1ull << bits) - 1);
  std::vector<std::uint64_t> masks(l->size());
  std::vector<std::string> labels(l->size());
  for (int x = 0; x < l->size(); ++x) {
    masks[x] = full & ~l->mask(x);  // dualize: ↑x ⊆ ↑y iff y ≤ x
    labels[x] = "up(" + l->label(x) + ")";
  }
  FilterCompletion out;
  out.frame = Frame::from_masks(masks, bits, labels);
  out.generator_of.resize(l->size());
  out.up_of.resize(l->size());
  for (int x = 0; x < l->size(); ++x) {
    int e = out.frame->element_with_mask(full & ~l->mask(x));
    out.generator_of[e] = x;
    out.up_of[x] = e;
  }
  return out;
}

// Free presentation of the assembly:
//   (L+ ⊕ F(L-), L- ⊕ F(L+), L+ ⊕ F(L-) ⊕ L- ⊕ F(L+)) / (C_L ∪ Com+ ∪ Com-)
// together with the isomorphism onto the generator-saturation assembly.
struct FreePresentationResult {
  BiframePtr biframe;
  AssemblyBiframe assembly;
  BiframeMap iso;  // biframe → assembly.biframe
};

inline FreePresentationResult assembly_free_presentation(const BiframePtr& b,
                                                         const Caps& caps = Caps::global()) {
  using namespace assembly_detail;
  FreePresentationResult out;
  out.assembly = biframe_assembly(b, caps);
  const FramePtr& L = b->l();

  FilterCompletion flp = filter_completion(b->lp());
  FilterCompletion flm = filter_completion(b->lm());

  Caps tight = caps;
  tight.max_frame = caps.max_free_presentation;
  CoproductResult c12 = coproduct(b->lp(), flm.frame, tight);   // M+
  CoproductResult c34 = coproduct(b->lm(), flp.frame, tight);   // M-
  CoproductResult main4 = coproduct(c12.frame, c34.frame, tight);
  FrameMap s1 = compose(main4.inj_a, c12.inj_a);  // L+
  FrameMap s2 = compose(main4.inj_a, c12.inj_b);  // F(L-)
  FrameMap s3 = compose(main4.inj_b, c34.inj_a);  // L-
  FrameMap s4 = compose(main4.inj_b, c34.inj_b);  // F(L+)
  const FramePtr& M4 = main4.frame;

  Relation rel{M4, {}};
  b->for_each_generating_inequality([&](int a, int bb, int c, int d) {
    rel.pairs.push_back({M4->meet(s1.img[a], s3.img[bb]), M4->join(s1.img[c], s3.img[d])});
  });
  for (int x = 0; x < b->lp()->size(); ++x) {
    int g = M4->meet(s1.img[x], s4.img[flp.up_of[x]]);
    int h = M4->join(s1.img[x], s4.img[flp.up_of[x]]);
    rel.pairs.push_back({g, M4->bot()});
    rel.pairs.push_back({M4->top(), h});
  }
  for (int x = 0; x < b->lm()->size(); ++x) {
    int g = M4->meet(s3.img[x], s2.img[flm.up_of[x]]);
    int h = M4->join(s3.img[x], s2.img[flm.up_of[x]]);
    rel.pairs.push_back({g, M4->bot()});
    rel.pairs.push_back({M4->top(), h});
  }
  Congruence cong = congruence_closure(M4, rel);
  // quotient of the whole triple: components collapse along their kernels
  BiframePtr four_fold = Biframe::make(c12.frame, c34.frame, M4, main4.inj_a, main4.inj_b);
  BiquotientResult bq = biquotient_by(four_fold, cong);
  out.biframe = bq.biframe;

  // universal map main4 → A_fin(L) on generators, then factored through q
  const FinitaryAssembly& fa = out.assembly.main;
  const FramePtr& A = fa.frame;
  FrameMap f1{b->lp(), A, std::vector<int>(b->lp()->size(), -1)};
  for (int x = 0; x < b->lp()->size(); ++x)
    f1.img[x] = fa.index_of_subset(nabla_subset(L, b->ep().img[x]));
  FrameMap f2{flm.frame, A, std::vector<int>(flm.frame->size(), -1)};
  for (int e = 0; e < flm.frame->size(); ++e)
    f2.img[e] = fa.index_of_subset(delta_subset(L, b->em().img[flm.generator_of[e]]));
  FrameMap f3{b->lm(), A, std::vector<int>(b->lm()->size(), -1)};
  for (int x = 0; x < b->lm()->size(); ++x)
    f3.img[x] = fa.index_of_subset(nabla_subset(L, b->em().img[x]));
  FrameMap f4{flp.frame, A, std::vector<int>(flp.frame->size(), -1)};
  for (int e = 0; e < flp.frame->size(); ++e)
    f4.img[e] = fa.index_of_subset(delta_subset(L, b->ep().img[flp.generator_of[e]]));
  FrameMap f12 = coproduct_pairing(c12, f1, f2);
  FrameMap f34 = coproduct_pairing(c34, f3, f4);
  FrameMap h4 = coproduct_pairing(main4, f12, f34);

  // h4 must kill the presenting congruence, giving the isomorphism
  FrameMap main_iso{out.biframe->l(), A, std::vector<int>(out.biframe->l()->size(), -1)};
  for (int e = 0; e < M4->size(); ++e) {
    int tgt = bq.q.witness.img[e];
    if (main_iso.img[tgt] >= 0 && main_iso.img[tgt] != h4.img[e])
      throw std::logic_error("universal map does not respect the free presentation");
    main_iso.img[tgt] = h4.img[e];
  }
  if (!main_iso.preserves_structure() || !main_iso.bijective())
    throw std::logic_error("free presentation is not isomorphic to the assembly");
  // components land inside Ap/Am via the subset encoding
  const FramePtr& Ap = out.assembly.biframe->lp();
  const FramePtr& Am = out.assembly.biframe->lm();
  FrameMap iso_p{out.biframe->lp(), Ap, std::vector<int>(out.biframe->lp()->size(), -1)};
  for (int e = 0; e < out.biframe->lp()->size(); ++e)
    iso_p.img[e] = Ap->element_with_mask(fa.subset_of[main_iso.img[out.biframe->ep().img[e]]]);
  FrameMap iso_m{out.biframe->lm(), Am, std::vector<int>(out.biframe->lm()->size(), -1)};
  for (int e = 0; e < out.biframe->lm()->size(); ++e)
    iso_m.img[e] = Am->element_with_mask(fa.subset_of[main_iso.img[out.biframe->em().img[e]]]);
  BiframeMap iso{out.biframe, out.assembly.biframe, iso_p, iso_m, main_iso};
  if (!iso.commutes() || !iso.is_isomorphism())
    throw std::logic_error("free presentation component isomorphism failed");
  out.iso = iso;
  return out;
}

// witness frame map L → 2 of a bipoint
inline FrameMap bipoint_witness(const BiframePtr& b, const Spectrum& s, int k) {
  const Frame& L = *b->l();
  const FrameMap& fp = s.pts_p[s.pairs[k].first];
  const FrameMap& fm = s.pts_m[s.pairs[k].second];
  FrameMap g{b->l(), Frame::two(), std::vector<int>(L.size(), 0)};
  for (int x = 0; x < L.size(); ++x) {
    bool one = false;
    for (int a = 0; a < b->lp()->size() && !one; ++a) {
      if (fp.img[a] != 1) continue;
      for (int c = 0; c < b->lm()->size() && !one; ++c)
        if (fm.img[c] == 1 && L.leq(L.meet(b->ep().img[a], b->em().img[c]), x)) one = true;
    }
    g.img[x] = one ? 1 : 0;
  }
  return g;
}

// α : Sk(bpt(L)) → bpt(A(L)), the unique extension of each bipoint along the
// nabla embedding. Asserted bijective; the bihomeomorphism and the four image
// identities are checked by callers.
struct AlphaResult {
  AssemblyBiframe assembly;
  Spectrum base_spectrum;      // bpt(B)
  Spectrum assembly_spectrum;  // bpt(A(B))
  BispacePtr skula_space;      // Sk(bpt(B))
  BispaceMap alpha;            // skula_space → assembly_spectrum.space
};

inline AlphaResult alpha(const BiframePtr& b, const Caps& caps = Caps::global()) {
  AlphaResult out{biframe_assembly(b, caps), bipoints(b, caps), {}, nullptr, {}};
  out.assembly_spectrum = bipoints(out.assembly.biframe, caps);
  out.skula_space = std::make_shared<Bispace>(skula(*out.base_spectrum.space));
  const int n = out.base_spectrum.space->size();
  std::vector<int> fn(n, -1);
  const auto& sa = out.assembly_spectrum;
  for (int k = 0; k < n; ++k) {
    FrameMap g = bipoint_witness(b, out.base_spectrum, k);
    // the extension maps each closed-congruence generator where g maps it
    int match = -1;
    for (std::size_t t = 0; t < sa.pairs.size(); ++t) {
      const FrameMap& tp = sa.pts_p[sa.pairs[t].first];
      const FrameMap& tm = sa.pts_m[sa.pairs[t].second];
      bool fits = true;
      for (int a = 0; a < b->lp()->size() && fits; ++a)
        if (tp.img[out.assembly.nabla_embed.fp.img[a]] !=
            g.img[b->ep().img[a]])
          fits = false;
      for (int c = 0; c < b->lm()->size() && fits; ++c)
        if (tm.img[out.assembly.nabla_embed.fm.img[c]] !=
            g.img[b->em().img[c]])
          fits = false;
      if (fits) {
        if (match >= 0) throw std::logic_error("alpha extension is not unique");
        match = static_cast<int>(t);
      }
    }
    if (match < 0) throw std::logic_error("bipoint has no extension to the assembly");
    fn[k] = match;
  }
  out.alpha = BispaceMap{out.skula_space, out.assembly_spectrum.space, fn};
  std::vector<bool> hit(out.assembly_spectrum.space->size(), false);
  for (int v : fn) {
    if (hit[v]) throw std::logic_error("alpha is not injective");
    hit[v] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }))
    throw std::logic_error("alpha is not surjective");
  return out;
}

// --- the bisp interior and the bisob closure --------------------------------

// spatialization congruence of a biquotient: identify what every surviving
// bipoint identifies
inline Congruence sp_congruence(const BiframePtr& b,
                                const std::vector<FrameMap>& witnesses,
                                const Congruence& c) {
  const FramePtr& L = b->l();
  std::vector<std::uint64_t> signature(L->size(), 0);
  int used = 0;
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    const FrameMap& g = witnesses[k];
    // g respects c iff it is constant on classes
    std::vector<int> value(c.classes(), -1);
    bool respects = true;
    for (int x = 0; x < L->size() && respects; ++x) {
      int& v = value[c.class_of(x)];
      if (v < 0)
        v = g.img[x];
      else if (v != g.img[x])
        respects = false;
    }
    if (!respects) continue;
    for (int x = 0; x < L->size(); ++x)
      if (g.img[x] == 1) signature[x] |= (1ull << used);
    ++used;
    if (used == 64) throw SizeCapExceeded("more than 64 surviving bipoints");
  }
  std::vector<int> cls(L->size());
  std::map<std::uint64_t, int> remap;
  for (int x = 0; x < L->size(); ++x) {
    auto [it, fresh] = remap.emplace(signature[x], static_cast<int>(remap.size()));
    cls[x] = it->second;
  }
  return Congruence(L, std::move(cls));
}

struct BispInterior {
  BiquotientLattice lattice;     // S(L), reverse-inclusion coframe
  std::vector<int> image;        // per element: index of bisp(C) in the lattice
  std::vector<int> fixpoints;    // sorted indices of bisp-fixed elements
  bool fixpoints_boolean;        // the fixpoint coframe is a Boolean algebra
};

inline BispInterior bisp_interior(const BiframePtr& b, const Caps& caps = Caps::global()) {
  BispInterior out;
  out.lattice = biquotient_lattice(b, caps);
  Spectrum s = bipoints(b, caps);
  std::vector<FrameMap> witnesses;
  for (std::size_t k = 0; k < s.pairs.size(); ++k)
    witnesses.push_back(bipoint_witness(b, s, static_cast<int>(k)));
  const FramePtr& L = b->l();
  out.image.resize(out.lattice.coframe->size());
  for (int e = 0; e < out.lattice.coframe->size(); ++e) {
    Congruence spc = sp_congruence(b, witnesses, out.lattice.congruences[e]);
    // finitary interior on main-component congruences: closure of the
    // restriction to pairs of finitary elements
    std::vector<int> fin = b->finitary_elements();
    std::vector<int> first(spc.classes(), -1);
    std::vector<std::pair<int, int>> seeds;
    for (int x : fin) {
      int cl = spc.class_of(x);
      if (first[cl] < 0)
        first[cl] = x;
      else
        seeds.push_back({first[cl], x});
    }
    Congruence bisp = detail::saturate(L, seeds);
    int idx = out.lattice.index_of(bisp);
    if (idx < 0) throw std::logic_error("bisp image left the biquotient lattice");
    out.image[e] = idx;
  }
  for (int e = 0; e < out.lattice.coframe->size(); ++e)
    if (out.image[e] == e) out.fixpoints.push_back(e);
  // Boolean test on the fixpoint lattice. Fixpoints are closed under joins
  // (the interior preserves finite joins); the fixpoint meet is the interior
  // of the lattice meet, the top is the interior of the lattice top, and the
  // bottom (the total congruence, empty spectrum) is always fixed.
  const FramePtr& S = out.lattice.coframe;
  const int top_fix = out.image[S->top()];
  out.fixpoints_boolean = true;
  for (int e : out.fixpoints) {
    bool complemented = false;
    for (int f : out.fixpoints)
      if (out.image[S->meet(e, f)] == S->bot() && S->join(e, f) == top_fix)
        complemented = true;
    if (!complemented) {
      out.fixpoints_boolean = false;
      break;
    }
  }
  return out;
}

// Bisober subsets of the bispectrum, computed definitionally (a subset is
// bisober when the finitary unit of the subspace is a bihomeomorphism), with
// the induced closure operator.
struct BisobClosure {
  BispacePtr spectrum;
  std::vector<PointSet> bisober_sets;  // sorted

  PointSet close(PointSet y) const {
    PointSet acc = full_set(spectrum->size());
    for (PointSet z : bisober_sets)
      if ((y & ~z) == 0) acc &= z;
    return acc;
  }
  bool is_bisober(PointSet y) const {
    return std::binary_search(bisober_sets.begin(), bisober_sets.end(), y);
  }
};

inline BisobClosure bisob_closure(const BispacePtr& spectrum,
                                  const Caps& caps = Caps::global()) {
  if (spectrum->size() > 16) throw SizeCapExceeded("bisob closure beyond 16 points");
  BisobClosure out{spectrum, {}};
  const PointSet full = full_set(spectrum->size());
  for (PointSet y = 0; y <= full; ++y) {
    auto sub = subspace(spectrum, y);
    if (unit_map(sub.space, Duality::finitary, caps).unit.is_bihomeomorphism())
      out.bisober_sets.push_back(y);
  }
  return out;
}

}  // namespace bifrm

#endif  // BIFRM_ASSEMBLY_HPP
