#ifndef BIFRM_CONGRUENCE_HPP
#define BIFRM_CONGRUENCE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bifrm/core.hpp"
#include "bifrm/frame.hpp"

namespace bifrm {

// A set of inequalities x ≤ y to be forced on the quotient.
struct Relation {
  FramePtr frame;
  std::vector<std::pair<int, int>> pairs;
};

// Lattice congruence stored as a partition; class ids are normalized by first
// occurrence so equal partitions compare equal componentwise.
class Congruence {
 public:
  Congruence() = default;
  Congruence(FramePtr frame, std::vector<int> class_of)
      : frame_(std::move(frame)), class_of_(std::move(class_of)) {
    normalize();
  }

  static Congruence diagonal(const FramePtr& f) {
    std::vector<int> cls(f->size());
    for (int i = 0; i < f->size(); ++i) cls[i] = i;
    return Congruence(f, std::move(cls));
  }
  static Congruence total(const FramePtr& f) {
    return Congruence(f, std::vector<int>(f->size(), 0));
  }

  const FramePtr& frame() const { return frame_; }
  int classes() const { return nclasses_; }
  int class_of(int e) const { return class_of_[e]; }
  bool same(int a, int b) const { return class_of_[a] == class_of_[b]; }
  const std::vector<int>& class_vector() const { return class_of_; }

  bool is_diagonal() const { return nclasses_ == frame_->size(); }
  bool is_total() const { return nclasses_ == 1; }

  // refinement order: this ⊆ other as relations
  bool refines(const Congruence& other) const {
    for (int a = 0; a < frame_->size(); ++a)
      for (int b = a + 1; b < frame_->size(); ++b)
        if (same(a, b) && !other.same(a, b)) return false;
    return true;
  }

  // compatibility report (diagnostic; construction keeps this true)
  ValidationReport validate() const {
    ValidationReport rep;
    const Frame& L = *frame_;
    for (int a = 0; a < L.size(); ++a)
      for (int b = a + 1; b < L.size(); ++b) {
        if (!same(a, b)) continue;
        for (int z = 0; z < L.size(); ++z) {
          if (!same(L.meet(a, z), L.meet(b, z)))
            rep.fail("meet-compatibility fails at " + L.label(a) + "≡" + L.label(b) +
                     " with " + L.label(z));
          if (!same(L.join(a, z), L.join(b, z)))
            rep.fail("join-compatibility fails at " + L.label(a) + "≡" + L.label(b) +
                     " with " + L.label(z));
        }
      }
    return rep;
  }

  // maximum element of each class (classes of lattice congruences are closed
  // under join, so the maximum exists and represents the class)
  std::vector<int> class_maxima() const {
    std::vector<int> maxima(nclasses_, -1);
    for (int e = 0; e < frame_->size(); ++e) {
      int c = class_of_[e];
      if (maxima[c] < 0 || frame_->leq(maxima[c], e)) maxima[c] = e;
    }
    return maxima;
  }

  friend bool operator==(const Congruence& a, const Congruence& b) {
    if (a.frame_ != b.frame_ && !structurally_equal(*a.frame_, *b.frame_)) return false;
    return a.class_of_ == b.class_of_;
  }
  friend bool operator!=(const Congruence& a, const Congruence& b) { return !(a == b); }
  friend bool operator<(const Congruence& a, const Congruence& b) {
    return a.class_of_ < b.class_of_;
  }

 private:
  FramePtr frame_;
  std::vector<int> class_of_;
  int nclasses_ = 0;

  void normalize() {
    // incoming ids may stem from a larger frame's classes
    int max_id = -1;
    for (int c : class_of_) max_id = std::max(max_id, c);
    std::vector<int> remap(max_id + 1, -1);
    int next = 0;
    for (int& c : class_of_) {
      if (remap[c] < 0) remap[c] = next++;
      c = remap[c];
    }
    nclasses_ = next;
  }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Least congruence merging every seed pair: union-find saturated by
// transitivity (built in) and ∧/∨-compatibility, propagating each actual
// merge against every element once.
inline Congruence saturate(const FramePtr& L,
                           const std::vector<std::pair<int, int>>& seeds) {
  UnionFind uf(L->size());
  std::vector<std::pair<int, int>> work;
  for (auto& [a, b] : seeds)
    if (uf.unite(a, b)) work.push_back({a, b});
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (int z = 0; z < L->size(); ++z) {
      int ma = L->meet(a, z), mb = L->meet(b, z);
      if (uf.unite(ma, mb)) work.push_back({ma, mb});
      int ja = L->join(a, z), jb = L->join(b, z);
      if (uf.unite(ja, jb)) work.push_back({ja, jb});
    }
  }
  std::vector<int> cls(L->size());
  for (int i = 0; i < L->size(); ++i) cls[i] = uf.find(i);
  return Congruence(L, std::move(cls));
}

}  // namespace detail

// Least congruence whose quotient forces x ≤ y for every (x, y) in R:
// identify x ∨ y with y, then saturate.
inline Congruence congruence_closure(const FramePtr& L, const Relation& R) {
  std::vector<std::pair<int, int>> seeds;
  seeds.reserve(R.pairs.size());
  for (auto& [x, y] : R.pairs) {
    if (x < 0 || x >= L->size() || y < 0 || y >= L->size())
      throw ElementNotInFrame("relation pair outside frame");
    seeds.push_back({L->join(x, y), y});
  }
  return detail::saturate(L, seeds);
}

inline Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  const FramePtr& L = a.frame();
  std::vector<int> cls(L->size());
  std::map<std::pair<int, int>, int> remap;
  for (int e = 0; e < L->size(); ++e) {
    auto key = std::make_pair(a.class_of(e), b.class_of(e));
    auto [it, fresh] = remap.emplace(key, static_cast<int>(remap.size()));
    cls[e] = it->second;
  }
  return Congruence(L, std::move(cls));
}

inline Congruence congruence_join(const Congruence& a, const Congruence& b) {
  const FramePtr& L = a.frame();
  std::vector<std::pair<int, int>> seeds;
  std::vector<int> first_a(L->size(), -1), first_b(L->size(), -1);
  for (int e = 0; e < L->size(); ++e) {
    int ca = a.class_of(e), cb = b.class_of(e);
    if (first_a[ca] < 0) first_a[ca] = e; else seeds.push_back({first_a[ca], e});
    if (first_b[cb] < 0) first_b[cb] = e; else seeds.push_back({first_b[cb], e});
  }
  return detail::saturate(L, seeds);
}

struct QuotientResult {
  FramePtr frame;
  FrameMap q;  // class map L → L/C
};

// Quotient frame on classes, each labeled by its maximum element.
inline QuotientResult quotient(const FramePtr& L, const Congruence& C) {
  std::vector<int> maxima = C.class_maxima();
  const int n = C.classes();
  auto class_leq = [&](int a, int b) {
    return C.same(L->meet(maxima[a], maxima[b]), maxima[a]);
  };
  auto class_join = [&](int a, int b) { return C.class_of(L->join(maxima[a], maxima[b])); };

  // join-irreducible classes: those strictly above the join of everything below
  std::vector<int> jirr;
  for (int x = 0; x < n; ++x) {
    int acc = -1;
    for (int y = 0; y < n; ++y)
      if (y != x && class_leq(y, x)) acc = acc < 0 ? y : class_join(acc, y);
    if (acc >= 0 && acc != x) jirr.push_back(x);
  }
  if (jirr.size() > 64) throw SizeCapExceeded("quotient has more than 64 join-irreducibles");
  std::vector<std::uint64_t> masks(n);
  std::vector<std::string> labels(n);
  for (int c = 0; c < n; ++c) {
    std::uint64_t m = 0;
    for (std::size_t b = 0; b < jirr.size(); ++b)
      if (class_leq(jirr[b], c)) m |= (1ull << b);
    masks[c] = m;
    labels[c] = L->label(maxima[c]);
  }
  FramePtr Q = Frame::from_masks(masks, static_cast<int>(jirr.size()), labels);
  if (Q->size() != n) throw std::logic_error("quotient classes collapsed in encoding");
  FrameMap q{L, Q, std::vector<int>(L->size(), -1)};
  for (int x = 0; x < L->size(); ++x) q.img[x] = Q->element_with_mask(masks[C.class_of(x)]);
  return QuotientResult{Q, q};
}

struct CongruenceLattice {
  FramePtr frame;                     // Boolean frame, one element per congruence
  std::vector<Congruence> elements;   // congruence for each frame element

  int index_of(const Congruence& c) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == c) return static_cast<int>(i);
    return -1;
  }
};

// The frame of all congruences of L ordered by inclusion. For a finite
// distributive carrier the congruences are exactly the kernels of the maps
// "delete a subset S of join-irreducibles": x ↦ mask(x) & ~S. That gives a
// Boolean lattice on 2^|J(L)| elements; the correspondence is cross-checked
// against brute-force partition enumeration in the test suite.
inline CongruenceLattice congruence_lattice(const FramePtr& L,
                                            const Caps& caps = Caps::global()) {
  if (L->size() > caps.max_congruence_carrier)
    throw SizeCapExceeded("congruence lattice of frame with " + std::to_string(L->size()) +
                          " elements (cap " + std::to_string(caps.max_congruence_carrier) + ")");
  const int j = L->jcount();
  if (j >= 31 || (1ll << j) > caps.max_frame)
    throw SizeCapExceeded("congruence lattice would have 2^" + std::to_string(j) + " elements");
  const int total = 1 << j;
  CongruenceLattice out;
  std::vector<std::uint64_t> masks(total);
  for (int s = 0; s < total; ++s) masks[s] = static_cast<std::uint64_t>(s);
  std::vector<std::string> labels(total);
  out.elements.reserve(total);

  // subset s of the irreducible list names the kernel of deleting the bits
  // those irreducibles own (bit positions and list positions may differ)
  std::vector<std::uint64_t> bits_of(total, 0);
  for (int s = 0; s < total; ++s)
    for (int b = 0; b < j; ++b)
      if ((s >> b) & 1) bits_of[s] |= L->own_bit(b);
  std::vector<int> order(total);
  for (int s = 0; s < total; ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int pa = popcount64(static_cast<std::uint64_t>(a));
    int pb = popcount64(static_cast<std::uint64_t>(b));
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::uint64_t> sorted_masks;
  std::vector<std::string> sorted_labels;
  for (int s : order) {
    std::vector<int> cls(L->size());
    std::map<std::uint64_t, int> remap;
    for (int e = 0; e < L->size(); ++e) {
      std::uint64_t key = L->mask(e) & ~bits_of[s];
      auto [it, fresh] = remap.emplace(key, static_cast<int>(remap.size()));
      cls[e] = it->second;
    }
    out.elements.emplace_back(L, std::move(cls));
    sorted_masks.push_back(static_cast<std::uint64_t>(s));
    sorted_labels.push_back("C" + std::to_string(s));
  }
  out.frame = Frame::from_masks(std::move(sorted_masks), j, std::move(sorted_labels));
  // from_masks sorts by (popcount, value) which matches `order`; sanity-check
  for (int i = 0; i < total; ++i)
    if (out.frame->mask(i) != static_cast<std::uint64_t>(order[i]))
      throw std::logic_error("congruence lattice element order out of sync");
  return out;
}

// Subset-of-join-irreducibles encoding of a congruence: bit b is set when the
// b-th irreducible collapses onto its lower cover. Returned in the
// irreducible-index space; `congruence_subset_bits` gives the mask-bit image.
// Throws if the congruence is not of the kernel form (cannot happen for
// distributive carriers; kept as a guard on the classical correspondence).
inline std::uint64_t congruence_subset(const Congruence& C) {
  const FramePtr& L = C.frame();
  const auto& J = L->join_irreducible_elements();
  std::uint64_t s = 0;
  std::uint64_t bits = 0;
  for (std::size_t b = 0; b < J.size(); ++b) {
    if (C.same(J[b], L->irreducible_lower_cover(static_cast<int>(b)))) {
      s |= (1ull << b);
      bits |= L->own_bit(static_cast<int>(b));
    }
  }
  for (int e = 0; e < L->size(); ++e)
    for (int f = e + 1; f < L->size(); ++f)
      if (C.same(e, f) != ((L->mask(e) & ~bits) == (L->mask(f) & ~bits)))
        throw std::logic_error("congruence is not a join-irreducible kernel");
  return s;
}

// nabla(x): least congruence identifying x with 0.
// delta(x): least congruence identifying x with 1.
// They are complements of each other in the congruence lattice.
struct PrincipalCongruences {
  Congruence nabla;
  Congruence delta;
};

inline Congruence nabla(const FramePtr& L, int x) {
  if (x < 0 || x >= L->size()) throw ElementNotInFrame("nabla of foreign element");
  return congruence_closure(L, Relation{L, {{x, L->bot()}}});
}
inline Congruence delta(const FramePtr& L, int x) {
  if (x < 0 || x >= L->size()) throw ElementNotInFrame("delta of foreign element");
  return congruence_closure(L, Relation{L, {{L->top(), x}}});
}
inline PrincipalCongruences principal_congruences(const FramePtr& L, int x) {
  return PrincipalCongruences{nabla(L, x), delta(L, x)};
}

}  // namespace bifrm

#endif  // BIFRM_CONGRUENCE_HPP
