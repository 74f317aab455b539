#ifndef BIFRM_FRAME_HPP
#define BIFRM_FRAME_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bifrm/core.hpp"
#include "bifrm/poset.hpp"

namespace bifrm {

class Frame;
using FramePtr = std::shared_ptr<const Frame>;

// Finite frame (= finite distributive lattice with designated bounds).
//
// Every element carries its downset of join-irreducibles as a 64-bit mask,
// so meet/join are AND/OR plus one index lookup, and element identity is mask
// identity. Elements are sorted by (popcount, mask), which fixes a canonical
// linear extension with bottom first and top last.
class Frame : public std::enable_shared_from_this<Frame> {
 public:
  int size() const { return static_cast<int>(mask_.size()); }
  int bot() const { return 0; }
  int top() const { return size() - 1; }
  std::uint64_t mask(int e) const { return mask_[e]; }
  const std::string& label(int e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(int a, int b) const { return (mask_[a] & ~mask_[b]) == 0; }
  int meet(int a, int b) const { return index_of_mask(mask_[a] & mask_[b]); }
  int join(int a, int b) const { return index_of_mask(mask_[a] | mask_[b]); }

  int join_all(const std::vector<int>& xs) const {
    std::uint64_t m = 0;
    for (int x : xs) m |= mask_[x];
    return index_of_mask(m);
  }
  int meet_all(const std::vector<int>& xs) const {
    std::uint64_t m = mask_[top()];
    for (int x : xs) m &= mask_[x];
    return index_of_mask(m);
  }

  int element_with_mask(std::uint64_t m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }

  // Indices of the join-irreducible elements, in canonical element order.
  const std::vector<int>& join_irreducible_elements() const { return jelems_; }
  int jcount() const { return static_cast<int>(jelems_.size()); }

  // The mask bit that the b-th join-irreducible contributes itself (its mask
  // minus the union of strictly smaller masks). Defined whenever the mask
  // family is a genuine downset family over its bit space, i.e. each
  // irreducible contributes exactly one new bit; proper subframes may not be.
  std::uint64_t own_bit(int b) const {
    std::uint64_t m = own_mask_[b];
    if (popcount64(m) != 1)
      throw std::logic_error("irreducible does not own a single bit; frame is a proper subfamily");
    return m;
  }
  // the unique lower cover of the b-th join-irreducible
  int irreducible_lower_cover(int b) const {
    return index_of_mask(mask_[jelems_[b]] & ~own_bit(b));
  }
  // translate a subset of the irreducible list into mask-bit space
  std::uint64_t jbits_of_subset(std::uint64_t s) const {
    std::uint64_t bits = 0;
    for (int b = 0; b < jcount(); ++b)
      if ((s >> b) & 1) bits |= own_bit(b);
    return bits;
  }

  int index_of_label(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[i] == label) return i;
    return -1;
  }

  Poset carrier_poset() const {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (i != j && leq(i, j)) pairs.push_back({i, j});
    return Poset(labels_, pairs);
  }

  // The induced subposet of join-irreducibles (Birkhoff dual).
  Poset jposet() const {
    std::vector<std::string> labels;
    for (int j : jelems_) labels.push_back(labels_[j]);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < jelems_.size(); ++a)
      for (std::size_t b = 0; b < jelems_.size(); ++b)
        if (a != b && leq(jelems_[a], jelems_[b]))
          pairs.push_back({static_cast<int>(a), static_cast<int>(b)});
    return Poset(labels, pairs);
  }

  bool isomorphic_to(const Frame& other) const {
    if (size() != other.size() || jcount() != other.jcount()) return false;
    return jposet().isomorphic_to(other.jposet());
  }

  // identical canonical encoding (same masks in the same order); a strictly
  // finer relation than isomorphism, independent of labels
  friend bool structurally_equal(const Frame& a, const Frame& b) {
    return a.mask_ == b.mask_ && a.jbits_ == b.jbits_;
  }

  // --- constructors ------------------------------------------------------

  // Frame of down-closed subsets of `p`, ordered by inclusion.
  static FramePtr downset_lattice(const Poset& p, const Caps& caps = Caps::global()) {
    if (p.size() > caps.max_join_irreducibles)
      throw SizeCapExceeded("downset lattice over poset with " + std::to_string(p.size()) +
                            " elements (cap " + std::to_string(caps.max_join_irreducibles) + ")");
    std::vector<std::uint64_t> downsets = enumerate_downset_masks(p, caps.max_frame);
    auto f = std::shared_ptr<Frame>(new Frame());
    f->init_from_masks(std::move(downsets), p.size());
    for (int e = 0; e < f->size(); ++e) f->labels_[e] = set_label(f->mask_[e], p);
    return f;
  }

  // Topology (or any ∪/∩-closed family of point-sets containing ∅ and X)
  // as a frame. `family` holds point bitmasks.
  static FramePtr from_family(int npoints, std::vector<std::uint32_t> family,
                              const std::vector<std::string>& point_labels = {}) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    const std::uint32_t full = npoints == 32 ? ~0u : ((1u << npoints) - 1);
    // minimal neighborhoods are the join-irreducibles
    std::vector<std::uint32_t> minn(npoints, full);
    for (int x = 0; x < npoints; ++x)
      for (std::uint32_t u : family)
        if ((u >> x) & 1) minn[x] &= u;
    std::vector<std::uint32_t> gens = minn;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (static_cast<int>(gens.size()) > 64)
      throw SizeCapExceeded("family has more than 64 join-irreducibles");
    std::vector<std::uint64_t> masks;
    masks.reserve(family.size());
    std::unordered_set<std::uint64_t> dedupe;
    for (std::uint32_t u : family) {
      std::uint64_t m = 0;
      for (std::size_t g = 0; g < gens.size(); ++g)
        if ((gens[g] & ~u) == 0) m |= (1ull << g);
      if (!dedupe.insert(m).second)
        throw InputError("family is not union/intersection generated by neighborhoods");
      masks.push_back(m);
    }
    auto f = std::shared_ptr<Frame>(new Frame());
    f->init_from_masks(std::move(masks), static_cast<int>(gens.size()));
    for (int e = 0; e < f->size(); ++e) {
      std::uint32_t u = 0;
      for (std::size_t g = 0; g < gens.size(); ++g)
        if ((f->mask_[e] >> g) & 1) u |= gens[g];
      f->labels_[e] = pointset_label(u, npoints, point_labels);
    }
    f->check_birkhoff("family frame");
    return f;
  }

  // Abstract lattice given by its order matrix. Validates lattice-hood and
  // throws NotDistributive when the distributive law fails.
  static FramePtr from_order(const std::vector<std::string>& labels,
                             const std::function<bool(int, int)>& leq,
                             const Caps& caps = Caps::global()) {
    ValidationReport rep = validate_order(labels, leq);
    for (const std::string& v : rep.violations)
      if (v.find("distributivity") != std::string::npos) throw NotDistributive(v);
    if (!rep.valid) throw InputError("not a lattice: " + rep.violations.front());
    const int n = static_cast<int>(labels.size());
    auto meet_of = [&](int a, int b) {
      for (int c = n - 1; c >= 0; --c) {
        if (!(leq(c, a) && leq(c, b))) continue;
        bool greatest = true;
        for (int d = 0; d < n && greatest; ++d)
          if (leq(d, a) && leq(d, b) && !leq(d, c)) greatest = false;
        if (greatest) return c;
      }
      return -1;
    };
    auto join_of = [&](int a, int b) {
      for (int c = 0; c < n; ++c) {
        if (!(leq(a, c) && leq(b, c))) continue;
        bool least = true;
        for (int d = 0; d < n && least; ++d)
          if (leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
        if (least) return c;
      }
      return -1;
    };
    return from_ops(n, labels, leq,
                    [&](int a, int b) { return join_of(a, b); },
                    [&](int a, int b) { return meet_of(a, b); }, caps);
  }

  // Lattice with order and operations already known to be well-defined
  // (quotients, congruence lattices). The Birkhoff encoding is rebuilt and
  // asserted; a failed assertion means the input was not distributive.
  static FramePtr from_ops(int n, const std::vector<std::string>& labels,
                           const std::function<bool(int, int)>& leq,
                           const std::function<int(int, int)>& join,
                           const std::function<int(int, int)>& meet,
                           const Caps& caps = Caps::global()) {
    if (n > caps.max_frame)
      throw SizeCapExceeded("frame carrier of size " + std::to_string(n));
    // join-irreducibles: x with join of strictly-below < x
    std::vector<int> below_join(n);
    int bot = -1;
    for (int x = 0; x < n; ++x) {
      int acc = -1;
      for (int y = 0; y < n; ++y)
        if (y != x && leq(y, x)) acc = acc < 0 ? y : join(acc, y);
      below_join[x] = acc;
      if (acc < 0) bot = x;
    }
    if (bot < 0) throw InputError("lattice has no bottom");
    std::vector<int> jirr;
    for (int x = 0; x < n; ++x)
      if (x != bot && below_join[x] != x) jirr.push_back(x);
    if (static_cast<int>(jirr.size()) > 64)
      throw SizeCapExceeded("more than 64 join-irreducibles");
    std::vector<std::uint64_t> masks(n);
    for (int x = 0; x < n; ++x) {
      std::uint64_t m = 0;
      for (std::size_t b = 0; b < jirr.size(); ++b)
        if (leq(jirr[b], x)) m |= (1ull << b);
      masks[x] = m;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto f = std::shared_ptr<Frame>(new Frame());
    std::vector<std::uint64_t> sorted = masks;
    f->init_from_masks(std::move(sorted), static_cast<int>(jirr.size()));
    if (f->size() != n) throw NotDistributive("join-irreducible masks do not separate elements");
    for (int x = 0; x < n; ++x) {
      int e = f->element_with_mask(masks[x]);
      f->labels_[e] = labels.empty() ? std::to_string(x) : labels[x];
    }
    // the encoding must agree with the supplied operations
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (f->element_with_mask(masks[join(a, b)]) != f->index_of_mask(masks[a] | masks[b]))
          throw NotDistributive("join disagrees with Birkhoff encoding");
        if (f->element_with_mask(masks[meet(a, b)]) != f->index_of_mask(masks[a] & masks[b]))
          throw NotDistributive("meet disagrees with Birkhoff encoding");
      }
    return f;
  }

  static FramePtr two() {
    auto f = std::shared_ptr<Frame>(new Frame());
    f->init_from_masks({0, 1}, 1);
    f->labels_ = {"0", "1"};
    return f;
  }
  static FramePtr one() {
    auto f = std::shared_ptr<Frame>(new Frame());
    f->init_from_masks({0}, 0);
    f->labels_ = {"*"};
    return f;
  }
  static FramePtr chain(int elements) { return downset_lattice(Poset::chain(elements - 1)); }
  static FramePtr boolean(int atoms) { return downset_lattice(Poset::antichain(atoms)); }

  // Build a frame directly from masks that are already downsets of a shared
  // join-irreducible poset (used by the coproduct).
  static FramePtr from_masks(std::vector<std::uint64_t> masks, int bits,
                             std::vector<std::string> labels) {
    auto f = std::shared_ptr<Frame>(new Frame());
    std::vector<std::uint64_t> original = masks;
    f->init_from_masks(std::move(masks), bits);
    for (std::size_t i = 0; i < original.size(); ++i)
      f->labels_[f->element_with_mask(original[i])] = labels[i];
    f->check_birkhoff("mask frame");
    return f;
  }

  // Report-valued law check for a claimed lattice order (associativity and
  // absorption hold definitionally once glb/lub exist; both are still probed
  // so the report lists every law).
  static ValidationReport validate_order(const std::vector<std::string>& labels,
                                         const std::function<bool(int, int)>& leq);

 private:
  std::vector<std::uint64_t> mask_;
  std::vector<std::string> labels_;
  std::vector<int> jelems_;
  std::vector<std::uint64_t> own_mask_;
  int jbits_ = 0;
  std::unordered_map<std::uint64_t, int> index_;

  Frame() = default;

  int index_of_mask(std::uint64_t m) const {
    auto it = index_.find(m);
    if (it == index_.end())
      throw ElementNotInFrame("mask names no element of the frame");
    return it->second;
  }

  void init_from_masks(std::vector<std::uint64_t> masks, int bits) {
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
      int pa = popcount64(a), pb = popcount64(b);
      return pa != pb ? pa < pb : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    mask_ = std::move(masks);
    jbits_ = bits;
    labels_.assign(mask_.size(), "");
    index_.clear();
    for (int i = 0; i < size(); ++i) index_.emplace(mask_[i], i);
    jelems_.clear();
    own_mask_.clear();
    // e is join-irreducible iff the union of strictly smaller masks is not all of it
    for (int e = 0; e < size(); ++e) {
      std::uint64_t m = mask_[e];
      if (popcount64(m) == 0) continue;
      std::uint64_t strictly_below = 0;
      for (int o = 0; o < size(); ++o)
        if (o != e && (mask_[o] & ~m) == 0) strictly_below |= mask_[o];
      if (strictly_below != m) {
        jelems_.push_back(e);
        own_mask_.push_back(m & ~strictly_below);
      }
    }
  }

  void check_birkhoff(const char* what) const {
    // downward closure and ∧∨ closure of the mask set
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b) {
        if (index_.find(mask_[a] & mask_[b]) == index_.end() ||
            index_.find(mask_[a] | mask_[b]) == index_.end())
          throw NotDistributive(std::string(what) + ": masks not closed under meet/join");
      }
  }

  static std::vector<std::uint64_t> enumerate_downset_masks(const Poset& p, int cap) {
    std::vector<std::uint64_t> lower(p.size(), 0);
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j)
        if (p.lt(j, i)) lower[i] |= (1ull << j);
    std::vector<std::uint64_t> out = {0};
    std::unordered_set<std::uint64_t> seen = {0};
    for (std::size_t head = 0; head < out.size(); ++head) {
      std::uint64_t d = out[head];
      for (int i = 0; i < p.size(); ++i) {
        if ((d >> i) & 1) continue;
        if ((lower[i] & ~d) != 0) continue;
        std::uint64_t nd = d | (1ull << i);
        if (seen.insert(nd).second) {
          out.push_back(nd);
          if (static_cast<int>(out.size()) > cap)
            throw SizeCapExceeded("downset lattice exceeds frame cap of " + std::to_string(cap));
        }
      }
    }
    return out;
  }

  static std::string set_label(std::uint64_t m, const Poset& p) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < p.size(); ++i)
      if ((m >> i) & 1) {
        if (!first) s += ",";
        s += p.label(i);
        first = false;
      }
    return s + "}";
  }

  static std::string pointset_label(std::uint32_t u, int npoints,
                                    const std::vector<std::string>& point_labels) {
    std::string s = "{";
    bool first = true;
    for (int x = 0; x < npoints; ++x)
      if ((u >> x) & 1) {
        if (!first) s += ",";
        s += point_labels.empty() ? std::to_string(x) : point_labels[x];
        first = false;
      }
    return s + "}";
  }
};

inline ValidationReport Frame::validate_order(const std::vector<std::string>& labels,
                                              const std::function<bool(int, int)>& leq) {
  ValidationReport rep;
  const int n = static_cast<int>(labels.size());
  if (n == 0) {
    rep.fail("empty carrier");
    return rep;
  }
  for (int i = 0; i < n; ++i)
    if (!leq(i, i)) rep.fail("order not reflexive at " + labels[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        rep.fail("order not antisymmetric at " + labels[i] + "," + labels[j]);
      if (leq(i, j))
        for (int k = 0; k < n; ++k)
          if (leq(j, k) && !leq(i, k))
            rep.fail("order not transitive at " + labels[i] + "," + labels[j] + "," + labels[k]);
    }
  if (!rep.valid) return rep;

  std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
  std::vector<std::vector<int>> join(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (leq(c, a) && leq(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (leq(d, a) && leq(d, b) && !leq(d, c)) greatest = false;
          if (greatest) { meet[a][b] = c; break; }
        }
      }
      for (int c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c)) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
          if (least) { join[a][b] = c; break; }
        }
      }
      if (meet[a][b] < 0)
        rep.fail("meet missing for " + labels[a] + "," + labels[b]);
      if (join[a][b] < 0)
        rep.fail("join missing for " + labels[a] + "," + labels[b]);
    }
  if (!rep.valid) return rep;

  int bot = 0, top = 0;
  for (int i = 0; i < n; ++i) {
    if (leq(i, bot)) bot = i;
    if (leq(top, i)) top = i;
  }
  for (int i = 0; i < n; ++i) {
    if (!leq(bot, i)) rep.fail("no bottom bound below " + labels[i]);
    if (!leq(i, top)) rep.fail("no top bound above " + labels[i]);
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (join[join[a][b]][c] != join[a][join[b][c]])
          rep.fail("associativity of join fails at " + labels[a] + "," + labels[b] + "," + labels[c]);
        if (meet[meet[a][b]][c] != meet[a][meet[b][c]])
          rep.fail("associativity of meet fails at " + labels[a] + "," + labels[b] + "," + labels[c]);
        if (meet[a][join[a][b]] != a || join[a][meet[a][b]] != a) {
          if (c == 0)
            rep.fail("absorption fails at " + labels[a] + "," + labels[b]);
        }
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]])
          rep.fail("distributivity fails: " + labels[a] + " ∧ (" + labels[b] + " ∨ " +
                   labels[c] + ") ≠ (" + labels[a] + " ∧ " + labels[b] + ") ∨ (" +
                   labels[a] + " ∧ " + labels[c] + ")");
      }
  return rep;
}

// Map between frames, stored pointwise. Maps are values; two maps are equal
// when they share endpoints and agree on every element.
struct FrameMap {
  FramePtr src;
  FramePtr dst;
  std::vector<int> img;

  int operator()(int e) const { return img[e]; }

  bool preserves_structure() const {
    if (static_cast<int>(img.size()) != src->size()) return false;
    if (img[src->bot()] != dst->bot() || img[src->top()] != dst->top()) return false;
    for (int a = 0; a < src->size(); ++a)
      for (int b = a; b < src->size(); ++b) {
        if (img[src->meet(a, b)] != dst->meet(img[a], img[b])) return false;
        if (img[src->join(a, b)] != dst->join(img[a], img[b])) return false;
      }
    return true;
  }

  bool injective() const {
    std::vector<bool> seen(dst->size(), false);
    for (int v : img) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }
  bool surjective() const {
    std::vector<bool> seen(dst->size(), false);
    for (int v : img) seen[v] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }
  bool bijective() const { return injective() && surjective(); }

  friend FrameMap compose(const FrameMap& g, const FrameMap& f) {  // g ∘ f
    FrameMap out{f.src, g.dst, {}};
    out.img.reserve(f.img.size());
    for (int v : f.img) out.img.push_back(g.img[v]);
    return out;
  }

  friend bool operator==(const FrameMap& a, const FrameMap& b) {
    return a.src == b.src && a.dst == b.dst && a.img == b.img;
  }

  static FrameMap identity(const FramePtr& f) {
    FrameMap m{f, f, std::vector<int>(f->size())};
    std::iota(m.img.begin(), m.img.end(), 0);
    return m;
  }
};

// The complete hom-set Frm(L, M), in deterministic order: candidates are
// explored join-irreducible by join-irreducible in canonical element order,
// images ascending. Search space is |M|^|J(L)|; the cap guards it.
inline std::vector<FrameMap> enumerate_frame_maps(const FramePtr& L, const FramePtr& M,
                                                  const Caps& caps = Caps::global()) {
  const auto& J = L->join_irreducible_elements();
  double space = 1;
  for (std::size_t i = 0; i < J.size(); ++i) {
    space *= M->size();
    if (space > static_cast<double>(caps.max_hom_candidates))
      throw SizeCapExceeded("hom-set search space |M|^|J(L)| exceeds cap");
  }
  std::vector<FrameMap> out;
  std::vector<int> jimg(J.size(), -1);
  std::vector<std::uint64_t> jimg_mask(J.size(), 0);

  // image mask of the join extension at the element with mask `em`; every
  // irreducible below em is already assigned when em is a meet of assigned ones
  auto extension_mask = [&](std::uint64_t em, std::size_t upto) {
    std::uint64_t dm = 0;
    for (std::size_t b = 0; b < upto; ++b)
      if ((L->mask(J[b]) & ~em) == 0) dm |= jimg_mask[b];
    return dm;
  };

  // the join extension preserves joins and bottom by construction; meet
  // preservation on pairs of irreducibles plus top landing on top makes it a
  // frame map (distributivity of M lifts the pairwise check to all elements)
  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == J.size()) {
      std::uint64_t m = 0;
      for (std::size_t b = 0; b < J.size(); ++b) m |= jimg_mask[b];
      if (m != M->mask(M->top())) return;
      FrameMap f{L, M, std::vector<int>(L->size(), -1)};
      for (int e = 0; e < L->size(); ++e)
        f.img[e] = M->element_with_mask(extension_mask(L->mask(e), J.size()));
      out.push_back(std::move(f));
      return;
    }
    for (int cand = 0; cand < M->size(); ++cand) {
      std::uint64_t cm = M->mask(cand);
      bool ok = true;
      for (std::size_t prev = 0; prev < pos && ok; ++prev) {
        std::uint64_t meet_em = L->mask(J[prev]) & L->mask(J[pos]);
        if (extension_mask(meet_em, pos) != (jimg_mask[prev] & cm)) ok = false;
      }
      if (!ok) continue;
      jimg[pos] = cand;
      jimg_mask[pos] = cm;
      dfs(pos + 1);
      jimg[pos] = -1;
      jimg_mask[pos] = 0;
    }
  };
  dfs(0);
  return out;
}

// Points of L, i.e. the hom-set Frm(L, 2).
inline std::vector<FrameMap> points(const FramePtr& L, const Caps& caps = Caps::global()) {
  return enumerate_frame_maps(L, Frame::two(), caps);
}

struct CoproductResult {
  FramePtr frame;
  FrameMap inj_a;
  FrameMap inj_b;
};

// A ⊕ B realized as the downset lattice of J(A) × J(B), with the canonical
// injections a ↦ {(p,q) : p ≤ a}. The universal pairing of maps f, g is
// h(D) = ⋁_{(p,q)∈D} f(p) ∧ g(q).
inline CoproductResult coproduct(const FramePtr& A, const FramePtr& B,
                                 const Caps& caps = Caps::global()) {
  Poset pa = A->jposet();
  Poset pb = B->jposet();
  if (pa.size() * pb.size() > caps.max_join_irreducibles)
    throw SizeCapExceeded("coproduct join-irreducible count exceeds 64");
  Poset prod = poset_product(pa, pb);
  FramePtr C = Frame::downset_lattice(prod, caps);
  const auto& JA = A->join_irreducible_elements();
  const auto& JB = B->join_irreducible_elements();
  auto inj = [&](const FramePtr& side, const std::vector<int>& JS, bool left) {
    FrameMap m{side, C, std::vector<int>(side->size(), -1)};
    for (int e = 0; e < side->size(); ++e) {
      std::uint64_t dm = 0;
      for (std::size_t i = 0; i < JA.size(); ++i)
        for (std::size_t j = 0; j < JB.size(); ++j) {
          bool in = left ? side->leq(JA[i], e) : side->leq(JB[j], e);
          if (in) dm |= 1ull << (i * JB.size() + j);
        }
      m.img[e] = C->element_with_mask(dm);
    }
    (void)JS;
    return m;
  };
  return CoproductResult{C, inj(A, JA, true), inj(B, JB, false)};
}

// Universal pairing A ⊕ B → M of f : A → M and g : B → M.
inline FrameMap coproduct_pairing(const CoproductResult& cp, const FrameMap& f,
                                  const FrameMap& g) {
  const FramePtr& C = cp.frame;
  const FramePtr& A = f.src;
  const FramePtr& B = g.src;
  const FramePtr& M = f.dst;
  const auto& JA = A->join_irreducible_elements();
  const auto& JB = B->join_irreducible_elements();
  FrameMap h{C, M, std::vector<int>(C->size(), -1)};
  for (int e = 0; e < C->size(); ++e) {
    std::uint64_t acc = 0;
    std::uint64_t em = C->mask(e);
    for (std::size_t i = 0; i < JA.size(); ++i)
      for (std::size_t j = 0; j < JB.size(); ++j)
        if ((em >> (i * JB.size() + j)) & 1)
          acc |= M->mask(M->meet(f.img[JA[i]], g.img[JB[j]]));
    h.img[e] = M->element_with_mask(acc);
  }
  return h;
}

}  // namespace bifrm

#endif  // BIFRM_FRAME_HPP
