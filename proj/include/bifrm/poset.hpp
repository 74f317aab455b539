#ifndef BIFRM_POSET_HPP
#define BIFRM_POSET_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bifrm/core.hpp"

namespace bifrm {

// Finite poset. Order is kept as a full boolean matrix; construction takes the
// reflexive-transitive closure of whatever generating relation is supplied and
// rejects antisymmetry violations.
class Poset {
 public:
  Poset() = default;

  // `pairs` is a generating relation (a <= b). Closure is taken here.
  Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& pairs)
      : labels_(std::move(labels)), n_(static_cast<int>(labels_.size())),
        leq_(static_cast<std::size_t>(n_) * n_, false) {
    for (int i = 0; i < n_; ++i) at(i, i) = true;
    for (auto& [a, b] : pairs) {
      if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw InputError("poset relation refers to unknown element");
      at(a, b) = true;
    }
    // Floyd-Warshall style transitive closure.
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        if (at(i, k))
          for (int j = 0; j < n_; ++j)
            if (at(k, j)) at(i, j) = true;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) && at(j, i))
          throw InputError("relation closure violates antisymmetry: " + labels_[i] +
                           " and " + labels_[j] + " become equal");
  }

  static Poset antichain(int n) {
    return Poset(default_labels(n), {});
  }
  static Poset chain(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
    return Poset(default_labels(n), pairs);
  }

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b]; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  int index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
      if (labels_[i] == label) return i;
    return -1;
  }

  bool covers(int a, int b) const {  // b covers a
    if (!lt(a, b)) return false;
    for (int c = 0; c < n_; ++c)
      if (lt(a, c) && lt(c, b)) return false;
    return true;
  }

  std::vector<int> downset_of(int a) const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (leq(i, a)) out.push_back(i);
    return out;
  }

  ValidationReport validate() const {
    // Construction already guarantees the axioms; re-derive them for the report.
    ValidationReport rep;
    for (int i = 0; i < n_; ++i)
      if (!leq(i, i)) rep.fail("reflexivity fails at " + labels_[i]);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && leq(i, j) && leq(j, i))
          rep.fail("antisymmetry fails at " + labels_[i] + "," + labels_[j]);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (leq(i, j))
          for (int k = 0; k < n_; ++k)
            if (leq(j, k) && !leq(i, k))
              rep.fail("transitivity fails at " + labels_[i] + "," + labels_[j] + "," + labels_[k]);
    return rep;
  }

  // Componentwise order on pairs.
  friend Poset poset_product(const Poset& p, const Poset& q) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(p.size()) * q.size());
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < q.size(); ++j)
        labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
    Poset out;
    out.labels_ = std::move(labels);
    out.n_ = p.size() * q.size();
    out.leq_.assign(static_cast<std::size_t>(out.n_) * out.n_, false);
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < q.size(); ++j)
        for (int k = 0; k < p.size(); ++k)
          for (int l = 0; l < q.size(); ++l)
            out.at(i * q.size() + j, k * q.size() + l) = p.leq(i, k) && q.leq(j, l);
    return out;
  }

  // Canonical signature under relabeling; equal signatures iff isomorphic.
  // Colors are refined by up/down degree profiles, then remaining ties are
  // broken by backtracking over all color-respecting permutations.
  std::vector<std::uint8_t> canonical_signature() const {
    std::vector<int> color(n_, 0);
    // iterated refinement
    for (int round = 0; round < n_; ++round) {
      std::vector<std::vector<int>> key(n_);
      for (int i = 0; i < n_; ++i) {
        std::vector<int> up, down;
        for (int j = 0; j < n_; ++j) {
          if (lt(i, j)) up.push_back(color[j]);
          if (lt(j, i)) down.push_back(color[j]);
        }
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        key[i].push_back(color[i]);
        key[i].push_back(-1);
        key[i].insert(key[i].end(), up.begin(), up.end());
        key[i].push_back(-2);
        key[i].insert(key[i].end(), down.begin(), down.end());
      }
      std::map<std::vector<int>, int> remap;
      for (int i = 0; i < n_; ++i) remap.emplace(key[i], 0);
      int next = 0;
      for (auto& kv : remap) kv.second = next++;
      std::vector<int> fresh(n_);
      for (int i = 0; i < n_; ++i) fresh[i] = remap.at(key[i]);
      if (fresh == color) break;
      color = fresh;
    }
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return color[a] != color[b] ? color[a] < color[b] : a < b;
    });
    std::vector<std::uint8_t> best;
    std::vector<int> perm(n_, -1);
    std::vector<bool> used(n_, false);
    search_canonical(order, color, 0, perm, used, best);
    return best;
  }

  bool isomorphic_to(const Poset& other) const {
    if (n_ != other.n_) return false;
    return canonical_signature() == other.canonical_signature();
  }

 private:
  std::vector<std::string> labels_;
  int n_ = 0;
  std::vector<bool> leq_;

  std::vector<bool>::reference at(int a, int b) { return leq_[static_cast<std::size_t>(a) * n_ + b]; }

  static std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return labels;
  }

  std::vector<std::uint8_t> signature_under(const std::vector<int>& perm) const {
    // perm[new position] = old index
    std::vector<std::uint8_t> sig;
    sig.reserve(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        sig.push_back(leq(perm[i], perm[j]) ? 1 : 0);
    return sig;
  }

  void search_canonical(const std::vector<int>& order, const std::vector<int>& color,
                        int pos, std::vector<int>& perm, std::vector<bool>& used,
                        std::vector<std::uint8_t>& best) const {
    if (pos == n_) {
      auto sig = signature_under(perm);
      if (best.empty() || sig < best) best = sig;
      return;
    }
    int want = color[order[pos]];
    for (int cand = 0; cand < n_; ++cand) {
      if (used[cand] || color[cand] != want) continue;
      perm[pos] = cand;
      used[cand] = true;
      search_canonical(order, color, pos + 1, perm, used, best);
      used[cand] = false;
    }
  }
};

// All posets with exactly `n` elements up to isomorphism, built by repeatedly
// attaching a new maximal element above an arbitrary downset. `downset_cap`
// (0 = none) prunes posets whose downset lattice exceeds the cap; pruning is
// sound because removing a maximal element never increases the downset count.
std::vector<Poset> enumerate_posets(int n, int downset_cap = 0);

namespace detail {

inline std::vector<std::vector<int>> all_downsets(const Poset& p) {
  std::vector<std::vector<int>> out;
  int n = p.size();
  if (n > 20) throw SizeCapExceeded("downset enumeration on poset with > 20 elements");
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask & (1 << i))
        for (int j = 0; j < n && ok; ++j)
          if (p.lt(j, i) && !(mask & (1 << j))) ok = false;
    if (!ok) continue;
    std::vector<int> d;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) d.push_back(i);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace detail

inline std::vector<Poset> enumerate_posets(int n, int downset_cap) {
  std::vector<Poset> current = {Poset({}, {})};
  for (int step = 0; step < n; ++step) {
    std::vector<Poset> next;
    std::vector<std::vector<std::uint8_t>> seen;
    for (const Poset& p : current) {
      auto downsets = detail::all_downsets(p);
      for (const auto& d : downsets) {
        std::vector<std::string> labels = p.labels();
        labels.push_back("p" + std::to_string(step));
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < p.size(); ++i)
          for (int j = 0; j < p.size(); ++j)
            if (p.lt(i, j)) pairs.push_back({i, j});
        for (int below : d) pairs.push_back({below, p.size()});
        Poset candidate(labels, pairs);
        if (downset_cap > 0 &&
            static_cast<int>(detail::all_downsets(candidate).size()) > downset_cap)
          continue;
        auto sig = candidate.canonical_signature();
        if (std::find(seen.begin(), seen.end(), sig) != seen.end()) continue;
        seen.push_back(sig);
        next.push_back(std::move(candidate));
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace bifrm

#endif  // BIFRM_POSET_HPP
