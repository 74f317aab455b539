#ifndef BIFRM_BIFRAME_HPP
#define BIFRM_BIFRAME_HPP

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bifrm/bispace.hpp"
#include "bifrm/congruence.hpp"
#include "bifrm/core.hpp"
#include "bifrm/frame.hpp"

namespace bifrm {

class Biframe;
using BiframePtr = std::shared_ptr<const Biframe>;

// Canonical presentation of a biframe: the coproduct of the components, the
// congruence presenting the main component, and the generating relation in
// binary form (one pair per inequality e+(a) ∧ e-(b) ≤ e+(c) ∨ e-(d)).
struct CanonicalPresentation {
  CoproductResult cp;          // Lp ⊕ Lm with the syntactic injections
  FrameMap pairing;            // Lp ⊕ Lm → L; its kernel is cL
  Congruence cL;
  Relation rL;                 // binary generating relation on the coproduct
  QuotientResult quot;         // (Lp ⊕ Lm)/cL
  FrameMap iso;                // (Lp ⊕ Lm)/cL → L, the canonical isomorphism
  std::vector<int> coproduct_finitary;  // finitary elements of the coproduct triple
};

// Triple (L+, L-, L) with injective frame maps whose images generate L via
// finite joins of binary meets. The canonical presentation is computed lazily;
// many operations on the main component never need the coproduct.
class Biframe : public std::enable_shared_from_this<Biframe> {
 public:
  static BiframePtr make(FramePtr lp, FramePtr lm, FramePtr l, FrameMap ep, FrameMap em) {
    auto b = std::shared_ptr<Biframe>(new Biframe());
    b->lp_ = std::move(lp);
    b->lm_ = std::move(lm);
    b->l_ = std::move(l);
    b->ep_ = std::move(ep);
    b->em_ = std::move(em);
    if (!b->ep_.preserves_structure() || !b->em_.preserves_structure())
      throw InputError("component injections are not frame maps");
    if (!b->ep_.injective()) throw NotInjective("positive injection not injective");
    if (!b->em_.injective()) throw NotInjective("negative injection not injective");
    if (b->finitary_elements().size() != static_cast<std::size_t>(b->l_->size()))
      throw NotGenerating("components do not generate the main component");
    return b;
  }

  // the biframe (2, 2, 2)
  static BiframePtr two() {
    FramePtr t = Frame::two();
    return make(t, t, t, FrameMap::identity(t), FrameMap::identity(t));
  }

  const FramePtr& lp() const { return lp_; }
  const FramePtr& lm() const { return lm_; }
  const FramePtr& l() const { return l_; }
  const FrameMap& ep() const { return ep_; }
  const FrameMap& em() const { return em_; }

  // All elements of L of the form ⋁ e+(a) ∧ e-(b): closure of the binary
  // meets of generators under joins. For a finite biframe this is all of L
  // (generation needs only finite joins); still computed definitionally.
  std::vector<int> finitary_elements() const {
    std::vector<bool> in(l_->size(), false);
    std::vector<int> members;
    auto add = [&](int e) {
      if (!in[e]) {
        in[e] = true;
        members.push_back(e);
      }
    };
    for (int a = 0; a < lp_->size(); ++a)
      for (int b = 0; b < lm_->size(); ++b)
        add(l_->meet(ep_.img[a], em_.img[b]));
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t k = 0; k <= head; ++k)
        add(l_->join(members[head], members[k]));
    std::vector<int> out;
    for (int e = 0; e < l_->size(); ++e)
      if (in[e]) out.push_back(e);
    return out;
  }

  // lazily computed once; safe to call from concurrent workers
  const CanonicalPresentation& presentation() const {
    std::call_once(pres_once_, [this] { pres_ = compute_presentation(); });
    return *pres_;
  }
  bool has_presentation() const { return pres_ != nullptr; }

  // Loop over the generating inequalities e+(a) ∧ e-(b) ≤ e+(c) ∨ e-(d)
  // without materializing them.
  template <typename F>
  void for_each_generating_inequality(F&& f) const {
    for (int a = 0; a < lp_->size(); ++a)
      for (int b = 0; b < lm_->size(); ++b) {
        int lhs = l_->meet(ep_.img[a], em_.img[b]);
        for (int c = 0; c < lp_->size(); ++c)
          for (int d = 0; d < lm_->size(); ++d)
            if (l_->leq(lhs, l_->join(ep_.img[c], em_.img[d]))) f(a, b, c, d);
      }
  }

 private:
  FramePtr lp_, lm_, l_;
  FrameMap ep_, em_;
  mutable std::once_flag pres_once_;
  mutable std::shared_ptr<CanonicalPresentation> pres_;

  Biframe() = default;

  std::shared_ptr<CanonicalPresentation> compute_presentation() const;
};

// Biframe map: a pair of component maps with the witnessing frame map.
struct BiframeMap {
  BiframePtr src, dst;
  FrameMap fp, fm;
  FrameMap witness;

  bool commutes() const {
    return compose(witness, src->ep()) == compose(dst->ep(), fp) &&
           compose(witness, src->em()) == compose(dst->em(), fm);
  }

  bool is_isomorphism() const {
    return fp.bijective() && fm.bijective() && witness.bijective();
  }

  friend BiframeMap compose(const BiframeMap& g, const BiframeMap& f) {
    return BiframeMap{f.src, g.dst, compose(g.fp, f.fp), compose(g.fm, f.fm),
                      compose(g.witness, f.witness)};
  }
  friend bool operator==(const BiframeMap& a, const BiframeMap& b) {
    return a.fp == b.fp && a.fm == b.fm && a.witness == b.witness;
  }

  static BiframeMap identity(const BiframePtr& b) {
    return BiframeMap{b, b, FrameMap::identity(b->lp()), FrameMap::identity(b->lm()),
                      FrameMap::identity(b->l())};
  }
};

// A pair of component maps is a biframe map iff every generating inequality of
// the source holds in the target after mapping. On success the witness is the
// join extension over generator meets.
inline std::optional<BiframeMap> try_biframe_map(const BiframePtr& src, const BiframePtr& dst,
                                                 const FrameMap& fp, const FrameMap& fm) {
  const Frame& M = *dst->l();
  const FrameMap& EP = dst->ep();
  const FrameMap& EM = dst->em();
  bool ok = true;
  src->for_each_generating_inequality([&](int a, int b, int c, int d) {
    if (!ok) return;
    int lhs = M.meet(EP.img[fp.img[a]], EM.img[fm.img[b]]);
    int rhs = M.join(EP.img[fp.img[c]], EM.img[fm.img[d]]);
    if (!M.leq(lhs, rhs)) ok = false;
  });
  if (!ok) return std::nullopt;
  const Frame& L = *src->l();
  FrameMap witness{src->l(), dst->l(), std::vector<int>(L.size(), -1)};
  for (int x = 0; x < L.size(); ++x) {
    std::uint64_t acc = 0;
    for (int a = 0; a < src->lp()->size(); ++a)
      for (int b = 0; b < src->lm()->size(); ++b) {
        if (!L.leq(L.meet(src->ep().img[a], src->em().img[b]), x)) continue;
        acc |= M.mask(M.meet(EP.img[fp.img[a]], EM.img[fm.img[b]]));
      }
    witness.img[x] = M.element_with_mask(acc);
  }
  BiframeMap out{src, dst, fp, fm, witness};
  if (!out.witness.preserves_structure() || !out.commutes())
    throw std::logic_error("witness construction failed despite valid relation mapping");
  return out;
}

// Biframe with main component (Lp ⊕ Lm)/⟨R⟩; the presentation is installed
// eagerly since the quotient congruence is the canonical one. Throws
// InjectionCollapsed when a syntactic injection stops being injective.
inline BiframePtr presented_biframe_over(const CoproductResult& cp, const FramePtr& lp,
                                         const FramePtr& lm, const Congruence& c) {
  QuotientResult q = quotient(cp.frame, c);
  FrameMap ip = compose(q.q, cp.inj_a);
  FrameMap im = compose(q.q, cp.inj_b);
  if (!ip.injective()) throw InjectionCollapsed("positive injection collapsed by the relation");
  if (!im.injective()) throw InjectionCollapsed("negative injection collapsed by the relation");
  BiframePtr b = Biframe::make(lp, lm, q.frame, ip, im);
  b->presentation();  // eager; kernel of the pairing equals c by construction
  return b;
}

inline BiframePtr presented_biframe(const FramePtr& lp, const FramePtr& lm, const Relation& r,
                                    const Caps& caps = Caps::global()) {
  CoproductResult cp = coproduct(lp, lm, caps);
  // the coproduct construction is deterministic, so a relation prepared on a
  // caller-built copy transfers by element index
  if (r.frame && !structurally_equal(*r.frame, *cp.frame))
    throw InputError("presentation relation lives on a different coproduct");
  Congruence c = congruence_closure(cp.frame, Relation{cp.frame, r.pairs});
  return presented_biframe_over(cp, lp, lm, c);
}

inline std::shared_ptr<CanonicalPresentation> Biframe::compute_presentation() const {
  auto pres = std::make_shared<CanonicalPresentation>();
  pres->cp = coproduct(lp_, lm_);
  pres->pairing = coproduct_pairing(pres->cp, ep_, em_);
  {
    std::vector<int> cls(pres->cp.frame->size());
    for (int e = 0; e < pres->cp.frame->size(); ++e) cls[e] = pres->pairing.img[e];
    pres->cL = Congruence(pres->cp.frame, std::move(cls));
  }
  pres->rL.frame = pres->cp.frame;
  for_each_generating_inequality([&](int a, int b, int c, int d) {
    int u = pres->cp.frame->meet(pres->cp.inj_a.img[a], pres->cp.inj_b.img[b]);
    int v = pres->cp.frame->join(pres->cp.inj_a.img[c], pres->cp.inj_b.img[d]);
    pres->rL.pairs.push_back({u, v});
  });
  pres->quot = quotient(pres->cp.frame, pres->cL);
  pres->iso = FrameMap{pres->quot.frame, l_, std::vector<int>(pres->quot.frame->size(), -1)};
  for (int e = 0; e < pres->cp.frame->size(); ++e)
    pres->iso.img[pres->quot.q.img[e]] = pres->pairing.img[e];
  // finitary elements of the coproduct triple (Lp, Lm, Lp ⊕ Lm)
  {
    const FramePtr& cpf = pres->cp.frame;
    std::vector<bool> in(cpf->size(), false);
    std::vector<int> members;
    auto add = [&](int e) {
      if (!in[e]) {
        in[e] = true;
        members.push_back(e);
      }
    };
    for (int a = 0; a < lp_->size(); ++a)
      for (int b = 0; b < lm_->size(); ++b)
        add(cpf->meet(pres->cp.inj_a.img[a], pres->cp.inj_b.img[b]));
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t k = 0; k <= head; ++k)
        add(cpf->join(members[head], members[k]));
    for (int e = 0; e < cpf->size(); ++e)
      if (in[e]) pres->coproduct_finitary.push_back(e);
  }
  return pres;
}

// --- the finitary fragment ---------------------------------------------------

// Finitary interior of a congruence on the coproduct Lp ⊕ Lm: the congruence
// generated by its restriction to pairs of finitary elements. Seeds link each
// finitary element to the first finitary member of its class; transitivity
// recovers all restricted pairs.
inline Congruence finitary_interior(const BiframePtr& b, const Congruence& c) {
  const CanonicalPresentation& pres = b->presentation();
  const FramePtr& cp = pres.cp.frame;
  if (c.frame() != cp) throw InputError("congruence lives on a different coproduct");
  std::vector<int> first(c.classes(), -1);
  std::vector<std::pair<int, int>> seeds;
  for (int e : pres.coproduct_finitary) {
    int cl = c.class_of(e);
    if (first[cl] < 0)
      first[cl] = e;
    else
      seeds.push_back({first[cl], e});
  }
  return detail::saturate(cp, seeds);
}

inline bool is_finitary(const BiframePtr& b) {
  const CanonicalPresentation& pres = b->presentation();
  return finitary_interior(b, pres.cL) == pres.cL;
}

struct CoreflectionResult {
  BiframePtr biframe;        // (Lp, Lm, (Lp ⊕ Lm)/fin(cL))
  BiframeMap counit;         // fin(B) → B, the pair of identities
  Congruence fin_cL;         // on the coproduct
};

inline CoreflectionResult fin_coreflect(const BiframePtr& b) {
  const CanonicalPresentation& pres = b->presentation();
  Congruence fin_c = finitary_interior(b, pres.cL);
  BiframePtr fin_b = presented_biframe_over(pres.cp, b->lp(), b->lm(), fin_c);
  auto eps = try_biframe_map(fin_b, b, FrameMap::identity(b->lp()), FrameMap::identity(b->lm()));
  if (!eps) throw std::logic_error("coreflection counit is not a biframe map");
  return CoreflectionResult{fin_b, *eps, fin_c};
}

// --- spectra -------------------------------------------------------------

// Bispectrum with the spatialization data attached. A pair of component
// points is a bipoint when no generating inequality is violated; with
// P± = ⋁ f±^{-1}(0) the quantifier over inequalities collapses to pairs
// (a, b) of generators against the extremal right side (P+, P-). The
// explicit four-condition filter and the points-of-L factoring description
// are kept in the tests as independent oracles.
struct Spectrum {
  BispacePtr space;
  std::vector<FrameMap> pts_p, pts_m;          // component points of Lp, Lm
  std::vector<std::pair<int, int>> pairs;      // the bipoints (ip, im)
  std::vector<PointSet> phi_p, phi_m;          // spatialization, per element

  int find_pair(int ip, int im) const {
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k] == std::make_pair(ip, im)) return static_cast<int>(k);
    return -1;
  }
};

inline Spectrum bipoints(const BiframePtr& b, const Caps& caps = Caps::global()) {
  Spectrum s;
  s.pts_p = points(b->lp(), caps);
  s.pts_m = points(b->lm(), caps);
  const Frame& L = *b->l();
  const FrameMap& ep = b->ep();
  const FrameMap& em = b->em();
  for (std::size_t i = 0; i < s.pts_p.size(); ++i)
    for (std::size_t j = 0; j < s.pts_m.size(); ++j) {
      const FrameMap& fp = s.pts_p[i];
      const FrameMap& fm = s.pts_m[j];
      std::uint64_t zp = 0, zm = 0;
      for (int a = 0; a < b->lp()->size(); ++a)
        if (fp.img[a] == 0) zp |= b->lp()->mask(a);
      for (int a = 0; a < b->lm()->size(); ++a)
        if (fm.img[a] == 0) zm |= b->lm()->mask(a);
      int pp = b->lp()->element_with_mask(zp);  // largest a+ with f+(a+) = 0
      int pm = b->lm()->element_with_mask(zm);
      int rhs = L.join(ep.img[pp], em.img[pm]);
      bool ok = true;
      for (int a = 0; a < b->lp()->size() && ok; ++a) {
        if (fp.img[a] == 0) continue;
        for (int bb = 0; bb < b->lm()->size() && ok; ++bb) {
          if (fm.img[bb] == 0) continue;
          if (L.leq(L.meet(ep.img[a], em.img[bb]), rhs)) ok = false;
        }
      }
      if (ok) s.pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  const int npts = static_cast<int>(s.pairs.size());
  if (npts > caps.max_points)
    throw SizeCapExceeded("bispectrum has " + std::to_string(npts) + " points");
  s.phi_p.assign(b->lp()->size(), 0);
  s.phi_m.assign(b->lm()->size(), 0);
  for (int k = 0; k < npts; ++k) {
    for (int a = 0; a < b->lp()->size(); ++a)
      if (s.pts_p[s.pairs[k].first].img[a] == 1) s.phi_p[a] |= (1u << k);
    for (int a = 0; a < b->lm()->size(); ++a)
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

// --- biquotients -----------------------------------------------------------

inline bool congruence_is_finitary(const BiframePtr& b, const Congruence& c) {
  const FramePtr& L = b->l();
  if (c.frame() != L) throw InputError("congruence lives on a different frame");
  std::vector<int> fin = b->finitary_elements();
  std::vector<int> first(c.classes(), -1);
  std::vector<std::pair<int, int>> seeds;
  for (int e : fin) {
    int cl = c.class_of(e);
    if (first[cl] < 0)
      first[cl] = e;
    else
      seeds.push_back({first[cl], e});
  }
  return detail::saturate(L, seeds) == c;
}

struct BiquotientResult {
  BiframePtr biframe;
  BiframeMap q;
  Congruence c;        // on the main component of the source
  bool finitary;       // ⟨R⟩ is generated by pairs of finitary elements
};

inline BiquotientResult biquotient_by(const BiframePtr& b, const Congruence& c) {
  const FramePtr& L = b->l();
  auto component = [&](const FrameMap& e) {
    std::vector<int> cls(e.src->size());
    for (int x = 0; x < e.src->size(); ++x) cls[x] = c.class_of(e.img[x]);
    return Congruence(e.src, std::move(cls));
  };
  Congruence cp = component(b->ep());
  Congruence cm = component(b->em());
  QuotientResult qp = quotient(b->lp(), cp);
  QuotientResult qm = quotient(b->lm(), cm);
  QuotientResult ql = quotient(L, c);
  auto induced = [&](const QuotientResult& qc, const FrameMap& e) {
    FrameMap m{qc.frame, ql.frame, std::vector<int>(qc.frame->size(), -1)};
    for (int x = 0; x < e.src->size(); ++x) m.img[qc.q.img[x]] = ql.q.img[e.img[x]];
    return m;
  };
  BiframePtr quot = Biframe::make(qp.frame, qm.frame, ql.frame, induced(qp, b->ep()),
                                  induced(qm, b->em()));
  BiframeMap qmap{b, quot, qp.q, qm.q, ql.q};
  if (!qmap.commutes()) throw std::logic_error("biquotient square does not commute");
  return BiquotientResult{quot, qmap, c, congruence_is_finitary(b, c)};
}

inline BiquotientResult biquotient(const BiframePtr& b, const Relation& r) {
  const FramePtr& L = b->l();
  return biquotient_by(b, congruence_closure(L, Relation{L, r.pairs}));
}

// The coframe S(L) of biquotients: finitary congruences on the main
// component, ordered by L/C ≤ L/D iff D ⊆ C. Realized through the subset
// encoding of the congruence lattice, so joins/meets stay bit operations.
struct BiquotientLattice {
  FramePtr coframe;
  std::vector<Congruence> congruences;  // per coframe element

  int index_of(const Congruence& c) const {
    for (std::size_t i = 0; i < congruences.size(); ++i)
      if (congruences[i] == c) return static_cast<int>(i);
    return -1;
  }
};

inline BiquotientLattice biquotient_lattice(const BiframePtr& b,
                                            const Caps& caps = Caps::global()) {
  CongruenceLattice all = congruence_lattice(b->l(), caps);
  const int jbits = b->l()->jcount();
  const std::uint64_t jfull = jbits == 64 ? ~0ull : ((1ull << jbits) - 1);
  std::vector<std::uint64_t> masks;
  std::vector<Congruence> kept;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < all.elements.size(); ++i) {
    if (!congruence_is_finitary(b, all.elements[i])) continue;
    // reverse inclusion: complement the subset mask
    masks.push_back(jfull & ~congruence_subset(all.elements[i]));
    kept.push_back(all.elements[i]);
    labels.push_back("q" + std::to_string(i));
  }
  BiquotientLattice out;
  out.coframe = Frame::from_masks(masks, jbits, labels);
  out.congruences.resize(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    out.congruences[out.coframe->element_with_mask(masks[i])] = kept[i];
  return out;
}

}  // namespace bifrm

#endif  // BIFRM_BIFRAME_HPP
