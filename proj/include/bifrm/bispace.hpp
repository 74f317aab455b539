#ifndef BIFRM_BISPACE_HPP
#define BIFRM_BISPACE_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "bifrm/core.hpp"
#include "bifrm/frame.hpp"

namespace bifrm {

using PointSet = std::uint32_t;

inline PointSet full_set(int n) { return n >= 32 ? ~0u : ((1u << n) - 1); }

// Close a family of point sets under union and intersection; ∅ and X are
// added if missing. Returns the closed family sorted; `added` (optional)
// collects everything that was not in the input.
inline std::vector<PointSet> close_family(int n, std::vector<PointSet> fam,
                                          std::vector<PointSet>* added = nullptr) {
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  std::vector<PointSet> input = fam;
  fam.push_back(0);
  fam.push_back(full_set(n));
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PointSet> fresh;
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        for (PointSet candidate : {static_cast<PointSet>(fam[i] | fam[j]),
                                   static_cast<PointSet>(fam[i] & fam[j])})
          if (!std::binary_search(fam.begin(), fam.end(), candidate))
            fresh.push_back(candidate);
      }
    if (!fresh.empty()) {
      grew = true;
      fam.insert(fam.end(), fresh.begin(), fresh.end());
      std::sort(fam.begin(), fam.end());
      fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    }
  }
  if (added)
    for (PointSet u : fam)
      if (!std::binary_search(input.begin(), input.end(), u)) added->push_back(u);
  return fam;
}

inline bool family_is_topology(int n, const std::vector<PointSet>& fam) {
  if (!std::binary_search(fam.begin(), fam.end(), static_cast<PointSet>(0))) return false;
  if (!std::binary_search(fam.begin(), fam.end(), full_set(n))) return false;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (!std::binary_search(fam.begin(), fam.end(), static_cast<PointSet>(fam[i] | fam[j])))
        return false;
      if (!std::binary_search(fam.begin(), fam.end(), static_cast<PointSet>(fam[i] & fam[j])))
        return false;
    }
  return true;
}

// Finite bitopological space. Both topologies are kept sorted; construction
// closes them (callers that need a report use close_family directly).
class Bispace {
 public:
  Bispace(int n, std::vector<PointSet> tau_p, std::vector<PointSet> tau_m,
          std::vector<std::string> labels = {})
      : n_(n), tauP_(close_family(n, std::move(tau_p))),
        tauM_(close_family(n, std::move(tau_m))), labels_(std::move(labels)) {
    if (n < 0 || n > Caps::global().max_points)
      throw SizeCapExceeded("bispace with " + std::to_string(n) + " points");
    if (labels_.empty())
      for (int i = 0; i < n_; ++i) labels_.push_back("x" + std::to_string(i));
  }

  int size() const { return n_; }
  const std::vector<PointSet>& tauP() const { return tauP_; }
  const std::vector<PointSet>& tauM() const { return tauM_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  bool open_p(PointSet u) const { return std::binary_search(tauP_.begin(), tauP_.end(), u); }
  bool open_m(PointSet u) const { return std::binary_search(tauM_.begin(), tauM_.end(), u); }

  ValidationReport validate() const {
    ValidationReport rep;
    if (!family_is_topology(n_, tauP_)) rep.fail("positive family is not a topology");
    if (!family_is_topology(n_, tauM_)) rep.fail("negative family is not a topology");
    return rep;
  }

  // smallest open of each topology containing the point
  PointSet min_nbhd_p(int x) const { return min_nbhd(tauP_, x); }
  PointSet min_nbhd_m(int x) const { return min_nbhd(tauM_, x); }

  friend bool operator==(const Bispace& a, const Bispace& b) {
    return a.n_ == b.n_ && a.tauP_ == b.tauP_ && a.tauM_ == b.tauM_;
  }

  // Canonical form under point bijections that preserve the two topologies in
  // their roles. Brute force over permutations; fine for the desk sizes used
  // in enumeration (≤ 6 points).
  std::vector<PointSet> canonical_signature() const {
    if (n_ > 6) throw SizeCapExceeded("canonical signature beyond 6 points");
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<PointSet> best;
    do {
      std::vector<PointSet> sig;
      sig.reserve(tauP_.size() + tauM_.size() + 1);
      auto push = [&](const std::vector<PointSet>& fam) {
        std::vector<PointSet> mapped;
        for (PointSet u : fam) {
          PointSet v = 0;
          for (int i = 0; i < n_; ++i)
            if ((u >> i) & 1) v |= (1u << perm[i]);
          mapped.push_back(v);
        }
        std::sort(mapped.begin(), mapped.end());
        sig.insert(sig.end(), mapped.begin(), mapped.end());
        sig.push_back(~0u);
      };
      push(tauP_);
      push(tauM_);
      if (best.empty() || sig < best) best = sig;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  bool bihomeomorphic_to(const Bispace& other) const {
    if (n_ != other.n_ || tauP_.size() != other.tauP_.size() ||
        tauM_.size() != other.tauM_.size())
      return false;
    return canonical_signature() == other.canonical_signature();
  }

 private:
  int n_;
  std::vector<PointSet> tauP_, tauM_;
  std::vector<std::string> labels_;

  PointSet min_nbhd(const std::vector<PointSet>& fam, int x) const {
    PointSet acc = full_set(n_);
    for (PointSet u : fam)
      if ((u >> x) & 1) acc &= u;
    return acc;
  }
};

using BispacePtr = std::shared_ptr<const Bispace>;

struct BispaceMap {
  BispacePtr src, dst;
  std::vector<int> fn;

  int operator()(int x) const { return fn[x]; }

  PointSet preimage(PointSet u) const {
    PointSet out = 0;
    for (int x = 0; x < src->size(); ++x)
      if ((u >> fn[x]) & 1) out |= (1u << x);
    return out;
  }
  PointSet image(PointSet u) const {
    PointSet out = 0;
    for (int x = 0; x < src->size(); ++x)
      if ((u >> x) & 1) out |= (1u << fn[x]);
    return out;
  }

  bool bicontinuous() const {
    for (PointSet u : dst->tauP())
      if (!src->open_p(preimage(u))) return false;
    for (PointSet u : dst->tauM())
      if (!src->open_m(preimage(u))) return false;
    return true;
  }

  bool bijective() const {
    if (src->size() != dst->size()) return false;
    std::vector<bool> seen(dst->size(), false);
    for (int v : fn) {
      if (v < 0 || v >= dst->size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  // bijective, bicontinuous, with bicontinuous inverse
  bool is_bihomeomorphism() const {
    if (!bijective() || !bicontinuous()) return false;
    for (PointSet u : src->tauP())
      if (!dst->open_p(image(u))) return false;
    for (PointSet u : src->tauM())
      if (!dst->open_m(image(u))) return false;
    return true;
  }

  static BispaceMap identity(const BispacePtr& x) {
    BispaceMap m{x, x, std::vector<int>(x->size())};
    std::iota(m.fn.begin(), m.fn.end(), 0);
    return m;
  }
};

// Topology generated by the union of the two topologies.
inline std::vector<PointSet> patch(const Bispace& x) {
  std::vector<PointSet> fam = x.tauP();
  fam.insert(fam.end(), x.tauM().begin(), x.tauM().end());
  return close_family(x.size(), std::move(fam));
}

// Positive side gains the negative closed sets and vice versa.
inline Bispace skula(const Bispace& x) {
  const PointSet full = full_set(x.size());
  std::vector<PointSet> p = x.tauP();
  for (PointSet u : x.tauM()) p.push_back(full & ~u);
  std::vector<PointSet> m = x.tauM();
  for (PointSet u : x.tauP()) m.push_back(full & ~u);
  return Bispace(x.size(), std::move(p), std::move(m), x.labels());
}

enum class SeparationAxiom { pairwiseT0, pairwiseT1, pairwiseT2, biTD };

inline bool separation(const Bispace& x, SeparationAxiom axiom) {
  const int n = x.size();
  switch (axiom) {
    case SeparationAxiom::pairwiseT0: {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          bool split = false;
          for (const auto* fam : {&x.tauP(), &x.tauM()})
            for (PointSet u : *fam)
              if (((u >> a) & 1) != ((u >> b) & 1)) split = true;
          if (!split) return false;
        }
      return true;
    }
    case SeparationAxiom::pairwiseT1: {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          bool found = false;
          for (const auto* fam : {&x.tauP(), &x.tauM()})
            for (PointSet u : *fam)
              if (((u >> a) & 1) && !((u >> b) & 1)) found = true;
          if (!found) return false;
        }
      return true;
    }
    case SeparationAxiom::pairwiseT2: {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          bool found = false;
          for (PointSet up : x.tauP())
            for (PointSet um : x.tauM()) {
              if ((up & um) != 0) continue;
              bool ab = ((up >> a) & 1) && ((um >> b) & 1);
              bool ba = ((up >> b) & 1) && ((um >> a) & 1);
              if (ab || ba) found = true;
            }
          if (!found) return false;
        }
      return true;
    }
    case SeparationAxiom::biTD: {
      // singleton {x} = U+ ∩ U- ∩ (V+)^c ∩ (V-)^c; the minimal neighborhoods
      // and the largest opens avoiding x are the extremal witnesses, so the
      // quantifier reduces to one candidate per point
      const PointSet full = full_set(n);
      for (int a = 0; a < n; ++a) {
        PointSet up = x.min_nbhd_p(a), um = x.min_nbhd_m(a);
        PointSet vp = 0, vm = 0;
        for (PointSet u : x.tauP())
          if (!((u >> a) & 1)) vp |= u;
        for (PointSet u : x.tauM())
          if (!((u >> a) & 1)) vm |= u;
        if ((up & um & (full & ~vp) & (full & ~vm)) != (1u << a)) return false;
      }
      return true;
    }
  }
  return false;
}

struct SubspaceResult {
  BispacePtr space;
  BispaceMap inclusion;
  std::vector<int> point_of_parent;  // subspace point -> parent point
};

inline SubspaceResult subspace(const BispacePtr& x, PointSet s) {
  std::vector<int> pts;
  for (int i = 0; i < x->size(); ++i)
    if ((s >> i) & 1) pts.push_back(i);
  auto restrict_family = [&](const std::vector<PointSet>& fam) {
    std::vector<PointSet> out;
    for (PointSet u : fam) {
      PointSet v = 0;
      for (std::size_t k = 0; k < pts.size(); ++k)
        if ((u >> pts[k]) & 1) v |= (1u << k);
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  std::vector<std::string> labels;
  for (int p : pts) labels.push_back(x->label(p));
  auto sub = std::make_shared<Bispace>(static_cast<int>(pts.size()),
                                       restrict_family(x->tauP()),
                                       restrict_family(x->tauM()), labels);
  BispaceMap incl{sub, x, pts};
  return SubspaceResult{sub, incl, pts};
}

}  // namespace bifrm

#endif  // BIFRM_BISPACE_HPP
