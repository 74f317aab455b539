#ifndef BIFRM_IO_HPP
#define BIFRM_IO_HPP

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bifrm/assembly.hpp"
#include "bifrm/biframe.hpp"
#include "bifrm/bispace.hpp"
#include "bifrm/core.hpp"
#include "bifrm/dframe.hpp"
#include "bifrm/duality.hpp"
#include "bifrm/frame.hpp"
#include "bifrm/poset.hpp"

namespace bifrm {

using json = nlohmann::json;

// --- posets and frames -------------------------------------------------------

// {"elements": [labels], "leq": [["a","b"], ...]}; the reflexive-transitive
// closure is taken on load.
inline Poset poset_from_json(const json& j) {
  if (!j.contains("elements") || !j["elements"].is_array())
    throw InputError("poset: missing elements array");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) labels.push_back(e.get<std::string>());
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.value("leq", json::array())) {
    if (!p.is_array() || p.size() != 2) throw InputError("poset: leq entries are pairs");
    auto find = [&](const std::string& s) {
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == s) return static_cast<int>(i);
      throw InputError("poset: unknown element " + s);
    };
    pairs.push_back({find(p[0].get<std::string>()), find(p[1].get<std::string>())});
  }
  return Poset(labels, pairs);
}

inline json poset_to_json(const Poset& p) {
  json j;
  j["kind"] = "poset";
  j["elements"] = p.labels();
  json leq = json::array();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.lt(a, b) && p.covers(a, b)) leq.push_back({p.label(a), p.label(b)});
  j["leq"] = leq;
  return j;
}

// Either {"poset": <Poset>} (downset lattice) or explicit {"elements","leq"}
// validated as a distributive lattice.
inline FramePtr frame_from_json(const json& j) {
  if (j.contains("poset")) return Frame::downset_lattice(poset_from_json(j["poset"]));
  Poset p = poset_from_json(j);
  return Frame::from_order(p.labels(), [&](int a, int b) { return p.leq(a, b); });
}

inline json frame_to_json(const FramePtr& f) {
  json j;
  j["kind"] = "frame";
  j["elements"] = f->labels();
  json leq = json::array();
  Poset carrier = f->carrier_poset();
  for (int a = 0; a < f->size(); ++a)
    for (int b = 0; b < f->size(); ++b)
      if (carrier.covers(a, b)) leq.push_back({f->label(a), f->label(b)});
  j["leq"] = leq;
  return j;
}

// --- the presentation-expression grammar -------------------------------------
//
//   expr := term ('|' term)*
//   term := atom ('&' atom)*
//   atom := '0' | '1' | name | '(' expr ')'
//
// Names are generator labels; a trailing '+' or '-' forces the side when the
// bare label is ambiguous. Expressions evaluate to coproduct elements.
class PresentationParser {
 public:
  PresentationParser(const FramePtr& lp, const FramePtr& lm, const CoproductResult& cp)
      : lp_(lp), lm_(lm), cp_(cp) {}

  int parse(const std::string& text) const {
    std::size_t pos = 0;
    int v = parse_expr(text, pos);
    skip_space(text, pos);
    if (pos != text.size())
      throw InputError("expression: trailing input at '" + text.substr(pos) + "'");
    return v;
  }

 private:
  FramePtr lp_, lm_;
  const CoproductResult& cp_;

  static void skip_space(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  int parse_expr(const std::string& s, std::size_t& pos) const {
    int v = parse_term(s, pos);
    while (true) {
      skip_space(s, pos);
      if (pos < s.size() && s[pos] == '|') {
        ++pos;
        v = cp_.frame->join(v, parse_term(s, pos));
      } else {
        return v;
      }
    }
  }

  int parse_term(const std::string& s, std::size_t& pos) const {
    int v = parse_atom(s, pos);
    while (true) {
      skip_space(s, pos);
      if (pos < s.size() && s[pos] == '&') {
        ++pos;
        v = cp_.frame->meet(v, parse_atom(s, pos));
      } else {
        return v;
      }
    }
  }

  int parse_atom(const std::string& s, std::size_t& pos) const {
    skip_space(s, pos);
    if (pos >= s.size()) throw InputError("expression: unexpected end of input");
    if (s[pos] == '(') {
      ++pos;
      int v = parse_expr(s, pos);
      skip_space(s, pos);
      if (pos >= s.size() || s[pos] != ')') throw InputError("expression: missing ')'");
      ++pos;
      return v;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::string("()&|").find(s[pos]) == std::string::npos &&
           !std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    std::string name = s.substr(start, pos - start);
    if (name.empty()) throw InputError("expression: stray '" + s.substr(start, 1) + "'");
    if (name == "0") return cp_.frame->bot();
    if (name == "1") return cp_.frame->top();
    return lookup(name);
  }

  int lookup(const std::string& name) const {
    int p = lp_->index_of_label(name);
    int m = lm_->index_of_label(name);
    if (p >= 0 && m >= 0)
      throw InputError("generator '" + name + "' is ambiguous; suffix it with + or -");
    if (p >= 0) return cp_.inj_a.img[p];
    if (m >= 0) return cp_.inj_b.img[m];
    if (!name.empty() && (name.back() == '+' || name.back() == '-')) {
      std::string bare = name.substr(0, name.size() - 1);
      if (name.back() == '+') {
        int e = lp_->index_of_label(bare);
        if (e >= 0) return cp_.inj_a.img[e];
      } else {
        int e = lm_->index_of_label(bare);
        if (e >= 0) return cp_.inj_b.img[e];
      }
    }
    throw InputError("unknown generator '" + name + "'");
  }
};

// {"Lp": <Frame>, "Lm": <Frame>, "relations": [["a+ & a-", "b+ | b-"], ...]}
inline BiframePtr biframe_from_json(const json& j) {
  if (!j.contains("Lp") || !j.contains("Lm")) throw InputError("biframe: missing Lp/Lm");
  FramePtr lp = frame_from_json(j["Lp"]);
  FramePtr lm = frame_from_json(j["Lm"]);
  CoproductResult cp = coproduct(lp, lm);
  PresentationParser parser(lp, lm, cp);
  Relation r{cp.frame, {}};
  for (const auto& pair : j.value("relations", json::array())) {
    if (!pair.is_array() || pair.size() != 2)
      throw InputError("biframe: relations entries are [lhs, rhs] pairs");
    r.pairs.push_back({parser.parse(pair[0].get<std::string>()),
                       parser.parse(pair[1].get<std::string>())});
  }
  return presented_biframe(lp, lm, r);
}

inline json biframe_to_json(const BiframePtr& b) {
  json j;
  j["kind"] = "biframe";
  j["Lp"] = frame_to_json(b->lp());
  j["Lm"] = frame_to_json(b->lm());
  j["main_size"] = b->l()->size();
  j["main_elements"] = b->l()->labels();
  return j;
}

// {"Lp": <Frame>, "Lm": <Frame>, "con": [[a,b],...], "tot": [[a,b],...]};
// closure normalization is applied and reported.
struct DFrameLoad {
  DFramePtr dframe;
  DFrame::NormalizationReport normalization;
};

inline DFrameLoad dframe_from_json(const json& j) {
  if (!j.contains("Lp") || !j.contains("Lm")) throw InputError("d-frame: missing Lp/Lm");
  FramePtr lp = frame_from_json(j["Lp"]);
  FramePtr lm = frame_from_json(j["Lm"]);
  auto pairs = [&](const char* key) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : j.value(key, json::array())) {
      if (!p.is_array() || p.size() != 2)
        throw InputError(std::string("d-frame: ") + key + " entries are pairs");
      int a = lp->index_of_label(p[0].get<std::string>());
      int b = lm->index_of_label(p[1].get<std::string>());
      if (a < 0 || b < 0)
        throw InputError(std::string("d-frame: unknown element in ") + key);
      out.push_back({a, b});
    }
    return out;
  };
  DFrameLoad out;
  out.dframe = DFrame::make(lp, lm, pairs("con"), pairs("tot"), true, &out.normalization);
  return out;
}

inline json dframe_to_json(const DFramePtr& d) {
  json j;
  j["kind"] = "dframe";
  j["Lp"] = frame_to_json(d->lp());
  j["Lm"] = frame_to_json(d->lm());
  json con = json::array(), tot = json::array();
  for (auto [a, b] : d->con_pairs()) con.push_back({d->lp()->label(a), d->lm()->label(b)});
  for (auto [a, b] : d->tot_pairs()) tot.push_back({d->lp()->label(a), d->lm()->label(b)});
  j["con"] = con;
  j["tot"] = tot;
  return j;
}

// {"points": [...], "tauP": [[...point labels...], ...], "tauM": [...]};
// families are closed under union/intersection, and additions are reported.
struct BispaceLoad {
  BispacePtr space;
  std::vector<PointSet> added_p, added_m;
};

inline BispaceLoad bispace_from_json(const json& j) {
  if (!j.contains("points")) throw InputError("bispace: missing points");
  std::vector<std::string> labels;
  for (const auto& p : j["points"]) labels.push_back(p.get<std::string>());
  const int n = static_cast<int>(labels.size());
  auto family = [&](const char* key) {
    std::vector<PointSet> fam;
    for (const auto& subset : j.value(key, json::array())) {
      PointSet u = 0;
      for (const auto& pt : subset) {
        std::string name = pt.get<std::string>();
        int idx = -1;
        for (int i = 0; i < n; ++i)
          if (labels[i] == name) idx = i;
        if (idx < 0) throw InputError("bispace: unknown point " + name);
        u |= (1u << idx);
      }
      fam.push_back(u);
    }
    return fam;
  };
  BispaceLoad out;
  auto tp = close_family(n, family("tauP"), &out.added_p);
  auto tm = close_family(n, family("tauM"), &out.added_m);
  out.space = std::make_shared<Bispace>(n, tp, tm, labels);
  return out;
}

inline json pointset_to_json(const Bispace& x, PointSet u) {
  json arr = json::array();
  for (int i = 0; i < x.size(); ++i)
    if ((u >> i) & 1) arr.push_back(x.label(i));
  return arr;
}

inline json bispace_to_json(const Bispace& x) {
  json j;
  j["kind"] = "bispace";
  j["points"] = x.labels();
  json tp = json::array(), tm = json::array();
  for (PointSet u : x.tauP()) tp.push_back(pointset_to_json(x, u));
  for (PointSet u : x.tauM()) tm.push_back(pointset_to_json(x, u));
  j["tauP"] = tp;
  j["tauM"] = tm;
  return j;
}

// --- DOT export ---------------------------------------------------------------

inline std::string poset_to_dot(const Poset& p, const std::string& name = "hasse") {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.covers(a, b)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string frame_to_dot(const FramePtr& f, const std::string& name = "hasse") {
  return poset_to_dot(f->carrier_poset(), name);
}

// --- generic file helpers -----------------------------------------------------

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

inline std::string detect_kind(const json& j) {
  if (j.contains("kind")) return j["kind"].get<std::string>();
  if (j.contains("points")) return "bispace";
  if (j.contains("con") || j.contains("tot")) return "dframe";
  if (j.contains("relations") || (j.contains("Lp") && j.contains("Lm"))) return "biframe";
  if (j.contains("poset")) return "frame";
  if (j.contains("elements")) return "poset";
  throw InputError("cannot detect input kind; add a \"kind\" field");
}

}  // namespace bifrm

#endif  // BIFRM_IO_HPP
