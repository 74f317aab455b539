// bifrm: finite bitopological laboratory command line.
//
//   bifrm validate  <file>                     check an input object, report violations
//   bifrm spectrum  <file> --duality bi|fin|d  spectrum through the chosen duality
//   bifrm skula     <bispace.json>             the skula bispace
//   bifrm check     <bispace.json> --axiom A   separation/sobriety queries
//   bifrm assembly  <biframe.json>             the assembly, optionally with extras
//   bifrm verify                               run the theorem suite
//   bifrm enumerate --max-points N             bispaces up to bihomeomorphism
//
// Exit codes: 0 ok, 1 theorem failure, 2 input error, 3 size cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "bifrm/io.hpp"
#include "bifrm/verify.hpp"

using namespace bifrm;

namespace {

void apply_env_caps() {
  auto read = [](const char* name, int& slot) {
    if (const char* v = std::getenv(name)) slot = std::max(1, std::atoi(v));
  };
  Caps& caps = Caps::global();
  read("BIFRM_CAP_FRAME", caps.max_frame);
  read("BIFRM_CAP_POINTS", caps.max_points);
  read("BIFRM_CAP_CONGRUENCE", caps.max_congruence_carrier);
  read("BIFRM_CAP_FREE_PRESENTATION", caps.max_free_presentation);
  if (const char* v = std::getenv("BIFRM_CAP_HOM"))
    caps.max_hom_candidates = std::max(1ll, std::atoll(v));
}

json spectrum_report(const Bispace& sp, const std::string& note) {
  json j = bispace_to_json(sp);
  j["note"] = note;
  return j;
}

void emit(const json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else if (j.contains("points")) {
    std::cout << j.value("note", std::string("bispace")) << ": " << j["points"].size()
              << " points, " << j["tauP"].size() << " positive opens, " << j["tauM"].size()
              << " negative opens\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite frames, biframes, d-frames and bispaces"};
  app.require_subcommand(1);
  app.fallthrough();
  apply_env_caps();

  std::string format = "text";
  app.add_option("--format", format, "output format: text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  int cap = 0;
  app.add_option("--cap", cap, "override the general frame size cap");

  std::string file;
  auto* validate = app.add_subcommand("validate", "validate an input object");
  validate->add_option("file", file)->required();

  auto* spectrum = app.add_subcommand("spectrum", "compute a spectrum");
  std::string duality = "fin";
  spectrum->add_option("file", file)->required();
  spectrum->add_option("--duality", duality, "bi|fin|d")
      ->check(CLI::IsMember({"bi", "fin", "d"}));

  auto* skula_cmd = app.add_subcommand("skula", "skula bispace of a bispace");
  skula_cmd->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "separation and sobriety queries");
  std::string axiom = "pairwiseT0";
  check->add_option("file", file)->required();
  check->add_option("--axiom", axiom,
                    "pairwiseT0|pairwiseT1|pairwiseT2|biTD|patchSober|biSober|dSober")
      ->check(CLI::IsMember({"pairwiseT0", "pairwiseT1", "pairwiseT2", "biTD", "patchSober",
                             "biSober", "dSober"}));

  auto* assembly_cmd = app.add_subcommand("assembly", "assembly of a finitary biframe");
  bool with_free = false, with_alpha = false;
  std::string dot_out;
  assembly_cmd->add_option("file", file)->required();
  assembly_cmd->add_flag("--free-presentation", with_free,
                         "also build the free presentation and verify the isomorphism");
  assembly_cmd->add_flag("--alpha", with_alpha,
                         "also certify the skula/assembly spectrum bihomeomorphism");
  assembly_cmd->add_option("--dot", dot_out, "write the assembly Hasse diagram to a file");

  auto* verify_cmd = app.add_subcommand("verify", "run the theorem suite");
  int max_points = 2;
  int samples = 200;
  std::uint64_t seed = 0;
  bool no_timing = false;
  verify_cmd->add_option("--max-points", max_points, "instance family size bound");
  verify_cmd->add_option("--samples", samples, "sample count for sampled checks");
  verify_cmd->add_option("--seed", seed, "seed for sampled checks");
  verify_cmd->add_flag("--no-timing", no_timing, "omit wall times (byte-reproducible output)");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "bispaces up to bihomeomorphism");
  int enum_points = 2;
  enumerate_cmd->add_option("--max-points", enum_points);

  CLI11_PARSE(app, argc, argv);
  if (cap > 0) Caps::global().max_frame = cap;

  try {
    if (*validate) {
      json j = load_json_file(file);
      std::string kind = detect_kind(j);
      ValidationReport rep;
      json extra = json::object();
      if (kind == "poset") {
        rep = poset_from_json(j).validate();
      } else if (kind == "frame") {
        FramePtr f = frame_from_json(j);
        rep = Frame::validate_order(f->labels(), [&](int a, int b) { return f->leq(a, b); });
      } else if (kind == "biframe") {
        biframe_from_json(j);  // construction validates
      } else if (kind == "dframe") {
        DFrameLoad load = dframe_from_json(j);
        rep = load.dframe->validate();
        json added = json::array();
        for (auto [a, b] : load.normalization.added_con)
          added.push_back({load.dframe->lp()->label(a), load.dframe->lm()->label(b)});
        extra["normalization_added_con"] = added;
        json added_t = json::array();
        for (auto [a, b] : load.normalization.added_tot)
          added_t.push_back({load.dframe->lp()->label(a), load.dframe->lm()->label(b)});
        extra["normalization_added_tot"] = added_t;
      } else if (kind == "bispace") {
        BispaceLoad load = bispace_from_json(j);
        rep = load.space->validate();
        extra["closure_added_positive"] = static_cast<int>(load.added_p.size());
        extra["closure_added_negative"] = static_cast<int>(load.added_m.size());
      }
      json out = {{"kind", kind}, {"valid", rep.valid}, {"violations", rep.violations}};
      out.update(extra);
      if (format == "dot" && (kind == "poset" || kind == "frame")) {
        if (kind == "poset")
          std::cout << poset_to_dot(poset_from_json(j));
        else
          std::cout << frame_to_dot(frame_from_json(j));
        return rep.valid ? 0 : 1;
      }
      if (format == "json")
        std::cout << out.dump(2) << "\n";
      else {
        std::cout << kind << ": " << (rep.valid ? "valid" : "INVALID") << "\n";
        for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
      }
      return rep.valid ? 0 : 1;
    }

    if (*spectrum) {
      json j = load_json_file(file);
      std::string kind = detect_kind(j);
      if (kind == "bispace") {
        BispacePtr x = bispace_from_json(j).space;
        if (duality == "bi") {
          Spectrum s = bipoints(b_omega(*x).biframe);
          emit(spectrum_report(*s.space, "bispectrum of the biframe of opens"), format);
        } else if (duality == "fin") {
          Spectrum s = bipoints(b_omega_fin(*x).biframe);
          emit(spectrum_report(*s.space, "bispectrum of the finitary biframe of opens"), format);
        } else {
          DSpectrum s = dpoints(d_omega(*x).dframe);
          emit(spectrum_report(*s.space, "d-spectrum of the d-frame of opens"), format);
        }
      } else if (kind == "biframe") {
        Spectrum s = bipoints(biframe_from_json(j));
        emit(spectrum_report(*s.space, "bispectrum"), format);
      } else if (kind == "dframe") {
        DSpectrum s = dpoints(dframe_from_json(j).dframe);
        emit(spectrum_report(*s.space, "d-spectrum"), format);
      } else {
        throw InputError("spectrum expects a bispace, biframe or d-frame");
      }
      return 0;
    }

    if (*skula_cmd) {
      BispacePtr x = bispace_from_json(load_json_file(file)).space;
      Bispace sk = skula(*x);
      emit(spectrum_report(sk, "skula bispace"), format);
      return 0;
    }

    if (*check) {
      BispacePtr x = bispace_from_json(load_json_file(file)).space;
      bool result = false;
      if (axiom == "pairwiseT0") result = separation(*x, SeparationAxiom::pairwiseT0);
      else if (axiom == "pairwiseT1") result = separation(*x, SeparationAxiom::pairwiseT1);
      else if (axiom == "pairwiseT2") result = separation(*x, SeparationAxiom::pairwiseT2);
      else if (axiom == "biTD") result = separation(*x, SeparationAxiom::biTD);
      else {
        SobrietyFlags f = sobriety(x);
        result = axiom == "patchSober" ? f.patch_sober
                 : axiom == "biSober"  ? f.bi_sober
                                       : f.d_sober;
      }
      if (format == "json")
        std::cout << json{{"axiom", axiom}, {"holds", result}}.dump(2) << "\n";
      else
        std::cout << axiom << ": " << (result ? "true" : "false") << "\n";
      return 0;
    }

    if (*assembly_cmd) {
      BiframePtr b = biframe_from_json(load_json_file(file));
      AssemblyBiframe ab = biframe_assembly(b);
      json out;
      out["main_size"] = ab.main.frame->size();
      out["positive_size"] = ab.biframe->lp()->size();
      out["negative_size"] = ab.biframe->lm()->size();
      out["base_main_size"] = b->l()->size();
      if (with_free) {
        FreePresentationResult fp = assembly_free_presentation(b);
        out["free_presentation"] = {{"main_size", fp.biframe->l()->size()},
                                    {"isomorphism_verified", fp.iso.is_isomorphism()}};
      }
      if (with_alpha) {
        AlphaResult a = alpha(b);
        out["alpha"] = {{"spectrum_points", a.base_spectrum.space->size()},
                        {"bihomeomorphism", a.alpha.is_bihomeomorphism()}};
      }
      if (!dot_out.empty()) {
        std::ofstream os(dot_out);
        os << frame_to_dot(ab.main.frame, "assembly");
        out["dot"] = dot_out;
      }
      if (format == "dot")
        std::cout << frame_to_dot(ab.main.frame, "assembly");
      else if (format == "json")
        std::cout << out.dump(2) << "\n";
      else
        std::cout << "assembly main component: " << ab.main.frame->size()
                  << " congruences (base main " << b->l()->size() << ")\n"
                  << out.dump(2) << "\n";
      return 0;
    }

    if (*verify_cmd) {
      SuiteConfig cfg;
      cfg.family.max_points = max_points;
      cfg.family.sample_count = samples;
      cfg.family.seed = seed;
      if (cap > 0) cfg.caps.max_frame = cap;
      Report report = verify(cfg);
      if (format == "json")
        std::cout << report.to_json(!no_timing).dump(2) << "\n";
      else
        std::cout << report.to_text(!no_timing);
      return report.all_ok() ? 0 : 1;
    }

    if (*enumerate_cmd) {
      auto spaces = enumerate_bispaces(enum_points);
      if (format == "json") {
        json arr = json::array();
        for (const auto& x : spaces) arr.push_back(bispace_to_json(*x));
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << spaces.size() << " bispaces with at most " << enum_points
                  << " points up to bihomeomorphism\n";
        for (const auto& x : spaces)
          std::cout << "  " << x->size() << " points, " << x->tauP().size() << "+"
                    << x->tauM().size() << " opens\n";
      }
      return 0;
    }
  } catch (const SizeCapExceeded& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
