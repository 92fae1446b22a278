// rooth: transforms, correlations, spectral classification, complementarity
// verification and exhaustive search for (generalized) Boolean functions.
//
// Exit codes: 0 success / verdict holds, 1 verdict fails, 2 usage or input
// format error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rooth/complementarity.hpp"
#include "rooth/correlations.hpp"
#include "rooth/json_io.hpp"
#include "rooth/search.hpp"
#include "rooth/spectrum.hpp"
#include "rooth/transforms.hpp"
#include "rooth/verification.hpp"

namespace {

using rooth::io::json;

int default_jobs() {
  if (const char* env = std::getenv("ROOTSPEC_JOBS")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (...) {
      return 0;
    }
  }
  return 0;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    rooth::io::save_json_file(out_path, j);
}

rooth::RootSpec need_spec(const std::string& spec_path, const std::string& why) {
  if (spec_path.empty())
    throw std::invalid_argument("--spec: required for " + why);
  return rooth::io::rootspec_from_json(rooth::io::load_json_file(spec_path));
}

struct TransformArgs {
  std::string kind, spec_path, mode = "exact", in_path, out_path;
};

int run_transform(const TransformArgs& a) {
  const auto F = rooth::io::function_from_json(rooth::io::load_json_file(a.in_path));
  rooth::Spectrum S;
  if (a.kind == "walsh") {
    if (F.k != 1) throw std::invalid_argument("kind walsh: function must have k = 1");
    S = rooth::walsh_hadamard(rooth::BooleanFunction(F.n, F.values));
  } else if (a.kind == "gwalsh") {
    S = rooth::generalized_walsh(F);
  } else if (a.kind == "nega") {
    S = rooth::nega_hadamard(F);
  } else if (a.kind == "root") {
    const auto spec = need_spec(a.spec_path, "kind root");
    if (a.mode == "float") {
      S = rooth::root_hadamard_float(F, spec);
    } else {
      if (!spec.all_orders_two_power())
        throw std::invalid_argument(
            "--mode exact: spec has a non-2-power order; rerun with --mode float");
      S = rooth::root_hadamard(F, spec);
    }
  } else {
    throw std::invalid_argument("--kind: unknown transform '" + a.kind + "'");
  }
  emit(rooth::io::spectrum_to_json(S, true), a.out_path);
  return 0;
}

struct CorrelateArgs {
  std::string kind, spec_path, f_path, g_path, out_path;
  std::string orientation = "definition";
};

int run_correlate(const CorrelateArgs& a) {
  using rooth::io::json;
  const bool seq_kind = a.kind.rfind("seq-", 0) == 0;
  if (seq_kind) {
    const auto sa = rooth::io::sequence_from_json(rooth::io::load_json_file(a.f_path));
    const auto sb = a.g_path.empty()
                        ? sa
                        : rooth::io::sequence_from_json(rooth::io::load_json_file(a.g_path));
    rooth::SeqCorrelation kind;
    if (a.kind == "seq-aperiodic") kind = rooth::SeqCorrelation::aperiodic;
    else if (a.kind == "seq-periodic") kind = rooth::SeqCorrelation::periodic;
    else if (a.kind == "seq-nega") kind = rooth::SeqCorrelation::negaperiodic;
    else throw std::invalid_argument("--kind: unknown correlation '" + a.kind + "'");
    json j;
    j["length"] = sa.size();
    j["kind"] = a.kind;
    std::vector<std::int64_t> vals;
    for (int k = 0; k < sa.size(); ++k) vals.push_back(rooth::seq_crosscorr(sa, sb, k, kind));
    j["values"] = vals;
    emit(j, a.out_path);
    return 0;
  }

  const auto F = rooth::io::function_from_json(rooth::io::load_json_file(a.f_path));
  const auto G = a.g_path.empty()
                     ? F
                     : rooth::io::function_from_json(rooth::io::load_json_file(a.g_path));
  rooth::CorrelationProfile p;
  p.n = F.n;
  const std::uint32_t size = rooth::table_size(F.n);
  if (a.kind == "cross") {
    p.ring_exponent = F.k;
    for (rooth::Point z = 0; z < size; ++z) p.values.push_back(rooth::crosscorrelation(F, G, z));
  } else if (a.kind == "nega") {
    p.ring_exponent = std::max(F.k, 1);
    for (rooth::Point z = 0; z < size; ++z)
      p.values.push_back(rooth::nega_crosscorrelation(F, G, z));
  } else if (a.kind == "root") {
    const auto spec = need_spec(a.spec_path, "kind root");
    const auto o = a.orientation == "spectral" ? rooth::Orientation::spectral
                                               : rooth::Orientation::definition;
    p.ring_exponent = std::max(spec.ring_exponent(), F.k);
    for (rooth::Point z = 0; z < size; ++z)
      p.values.push_back(rooth::root_crosscorrelation(F, G, spec, z, o));
  } else {
    throw std::invalid_argument("--kind: unknown correlation '" + a.kind + "'");
  }
  emit(rooth::io::profile_to_json(p, a.kind), a.out_path);
  return 0;
}

struct ClassifyArgs {
  std::string kind = "walsh", spec_path, in_path, out_path, mode = "exact";
};

int run_classify(const ClassifyArgs& a) {
  const json j = rooth::io::load_json_file(a.in_path);
  rooth::Spectrum S;
  if (j.contains("entries") || j.contains("entries_complex")) {
    S = rooth::io::spectrum_from_json(j);
  } else {
    const auto F = rooth::io::function_from_json(j);
    if (a.kind == "walsh") {
      if (F.k != 1) throw std::invalid_argument("kind walsh: function must have k = 1");
      S = rooth::walsh_hadamard(rooth::BooleanFunction(F.n, F.values));
    } else if (a.kind == "gwalsh") {
      S = rooth::generalized_walsh(F);
    } else if (a.kind == "nega") {
      S = rooth::nega_hadamard(F);
    } else if (a.kind == "root") {
      const auto spec = need_spec(a.spec_path, "kind root");
      if (a.mode == "float" || !spec.all_orders_two_power())
        S = rooth::root_hadamard_float(F, spec);
      else
        S = rooth::root_hadamard(F, spec);
    } else {
      throw std::invalid_argument("--kind: unknown transform '" + a.kind + "'");
    }
  }
  json out = rooth::io::class_to_json(rooth::classify_spectrum(S));
  out["n"] = S.n;
  out["transform"] = rooth::to_string(S.kind);
  emit(out, a.out_path);
  return 0;
}

struct SearchArgs {
  std::string what, space_path, spec_path, target_path, out_path;
  int jobs = 0;
};

int run_search(const SearchArgs& a) {
  if (a.space_path.empty()) throw std::invalid_argument("--space: required");
  const json sj = rooth::io::load_json_file(a.space_path);
  if (a.what == "golay") {
    if (!sj.contains("length"))
      throw std::invalid_argument("space: golay search needs field 'length'");
    const int N = sj["length"].get<int>();
    rooth::SeqCorrelation kind = rooth::SeqCorrelation::aperiodic;
    const std::string ks = sj.value("kind", "aperiodic");
    if (ks == "periodic") kind = rooth::SeqCorrelation::periodic;
    else if (ks == "negaperiodic" || ks == "nega") kind = rooth::SeqCorrelation::negaperiodic;
    else if (ks != "aperiodic") throw std::invalid_argument("space.kind: unknown '" + ks + "'");
    emit(rooth::io::pairs_to_json(rooth::search_golay_pairs(N, kind)), a.out_path);
    return 0;
  }
  const auto space = rooth::io::space_from_json(sj);
  const auto spec = need_spec(a.spec_path, "function-space searches");
  if (a.what == "root-bent") {
    emit(rooth::io::hits_to_json(rooth::search_root_bent(space, spec, a.jobs)), a.out_path);
    return 0;
  }
  if (a.what == "profile") {
    if (a.target_path.empty()) throw std::invalid_argument("--target: required for profile");
    const auto target = rooth::io::target_from_json(rooth::io::load_json_file(a.target_path),
                                                    space.n);
    emit(rooth::io::hits_to_json(rooth::search_profile_match(space, spec, target, a.jobs)),
         a.out_path);
    return 0;
  }
  throw std::invalid_argument("search: unknown mode '" + a.what + "'");
}

struct VerifyArgs {
  std::string check, spec_path, out_path;
  std::vector<std::string> in_paths;
};

json verdict_to_json(const rooth::ComplementarityVerdict& v, int n_bits) {
  json j;
  j["kind"] = v.kind;
  j["holds"] = v.holds;
  j["witnesses"] = json::array();
  for (auto w : v.witnesses) {
    if (n_bits > 0) {
      json bits = json::array();
      for (int i = 0; i < n_bits; ++i) bits.push_back(rooth::point_bit(w, i, n_bits));
      j["witnesses"].push_back(bits);
    } else {
      j["witnesses"].push_back(w);
    }
  }
  return j;
}

int run_verify(const VerifyArgs& a) {
  // either one combined inputs file or one file per sequence/function
  json j;
  if (a.in_paths.size() == 1) {
    j = rooth::io::load_json_file(a.in_paths[0]);
  } else {
    json items = json::array();
    for (const auto& p : a.in_paths) items.push_back(rooth::io::load_json_file(p));
    if (items[0].contains("entries"))
      j["sequences"] = items;
    else
      j["functions"] = items;
  }
  json out;
  bool holds = false;

  auto sequences_of = [&](const json& arr) {
    std::vector<rooth::BipolarSequence> seqs;
    for (const auto& sj : arr)
      seqs.push_back(sj.is_array() ? rooth::BipolarSequence(sj.get<std::vector<int>>())
                                   : rooth::io::sequence_from_json(sj));
    return seqs;
  };

  if (a.check == "golay" || a.check == "p-set" || a.check == "n-set") {
    if (!j.contains("sequences"))
      throw std::invalid_argument("inputs: field 'sequences' required");
    const auto kind = a.check == "golay"   ? rooth::SeqCorrelation::aperiodic
                      : a.check == "p-set" ? rooth::SeqCorrelation::periodic
                                           : rooth::SeqCorrelation::negaperiodic;
    const auto v = rooth::is_complementary_set(sequences_of(j["sequences"]), kind);
    holds = v.holds;
    out = verdict_to_json(v, 0);
  } else if (a.check == "iff-pn") {
    if (!j.contains("sequences") || j["sequences"].size() != 2)
      throw std::invalid_argument("inputs: 'sequences' must hold exactly two sequences");
    const auto seqs = sequences_of(j["sequences"]);
    const auto r = rooth::complementary_iff_P_and_N(seqs[0], seqs[1]);
    holds = r.equivalence_holds;
    out["aperiodic"] = verdict_to_json(r.aperiodic, 0);
    out["periodic"] = verdict_to_json(r.periodic, 0);
    out["negaperiodic"] = verdict_to_json(r.negaperiodic, 0);
    out["equivalence_holds"] = r.equivalence_holds;
  } else if (a.check == "la-set" || a.check == "la-cross" || a.check == "thm-components") {
    const auto spec = need_spec(a.spec_path, "LA checks");
    auto functions_of = [&](const json& arr) {
      std::vector<rooth::GeneralizedBooleanFunction> fs;
      for (const auto& fj : arr) fs.push_back(rooth::io::function_from_json(fj));
      return fs;
    };
    if (a.check == "la-set") {
      if (!j.contains("functions"))
        throw std::invalid_argument("inputs: field 'functions' required");
      const auto v = rooth::is_la_complementary_set(functions_of(j["functions"]), spec);
      holds = v.holds;
      out = verdict_to_json(v, spec.n);
    } else if (a.check == "la-cross") {
      if (!j.contains("left") || !j.contains("right"))
        throw std::invalid_argument("inputs: fields 'left' and 'right' required");
      const auto v = rooth::is_la_crosscomplementary(functions_of(j["left"]),
                                                     functions_of(j["right"]), spec);
      holds = v.holds;
      out = verdict_to_json(v, spec.n);
    } else {
      if (!j.contains("functions"))
        throw std::invalid_argument("inputs: field 'functions' required");
      const auto r = rooth::verify_component_complementarity(functions_of(j["functions"]), spec);
      holds = r.agree;
      out["set_side"] = r.set_side;
      out["components_side"] = r.components_side;
      out["identity_holds"] = r.identity_holds;
      out["agree"] = r.agree;
    }
  } else {
    throw std::invalid_argument("--check: unknown check '" + a.check + "'");
  }
  emit(out, a.out_path);
  return holds ? 0 : 1;
}

int run_verify_paper(const std::string& only, int jobs, bool list) {
  if (list) {
    for (const auto& name : rooth::verify::check_names()) std::cout << name << "\n";
    return 0;
  }
  std::vector<rooth::verify::CheckResult> results;
  if (only.empty()) {
    results = rooth::verify::run_all_checks(jobs);
  } else {
    results.push_back(rooth::verify::run_check(only, jobs));
  }
  bool all = true;
  for (const auto& r : results) {
    std::printf("%-28s %s  (%.2fs)  %s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                r.seconds, r.detail.c_str());
    all = all && r.passed;
  }
  std::printf("%zu/%zu checks passed\n",
              static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                     [](const auto& r) { return r.passed; })),
              results.size());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"root-Hadamard transforms, correlations and complementarity"};
  app.require_subcommand(1);

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "compute a transform spectrum");
  transform->add_option("--kind", ta.kind, "walsh|gwalsh|nega|root")->required();
  transform->add_option("--spec", ta.spec_path, "RootSpec JSON (kind root)");
  transform->add_option("--mode", ta.mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));
  transform->add_option("input", ta.in_path, "function JSON")->required();
  transform->add_option("-o,--output", ta.out_path, "output path (default stdout)");

  CorrelateArgs ca;
  auto* correlate = app.add_subcommand("correlate", "compute a correlation profile");
  correlate->add_option("--kind", ca.kind, "cross|nega|root|seq-aperiodic|seq-periodic|seq-nega")
      ->required();
  correlate->add_option("--spec", ca.spec_path, "RootSpec JSON (kind root)");
  correlate->add_option("--orientation", ca.orientation, "definition|spectral (kind root)")
      ->check(CLI::IsMember({"definition", "spectral"}));
  correlate->add_option("f", ca.f_path, "first function/sequence JSON")->required();
  correlate->add_option("g", ca.g_path, "second function/sequence JSON (default: f)");
  correlate->add_option("-o,--output", ca.out_path, "output path (default stdout)");

  ClassifyArgs cla;
  auto* classify = app.add_subcommand("classify", "classify a spectrum (bent/plateaued/...)");
  classify->add_option("--kind", cla.kind, "transform to apply when input is a function");
  classify->add_option("--spec", cla.spec_path, "RootSpec JSON (kind root)");
  classify->add_option("--mode", cla.mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));
  classify->add_option("input", cla.in_path, "function or spectrum JSON")->required();
  classify->add_option("-o,--output", cla.out_path, "output path (default stdout)");

  SearchArgs sa;
  sa.jobs = default_jobs();
  auto* search = app.add_subcommand("search", "exhaustive searches");
  search->add_option("mode", sa.what, "root-bent|profile|golay")->required();
  search->add_option("--space", sa.space_path, "search space JSON")->required();
  search->add_option("--spec", sa.spec_path, "RootSpec JSON");
  search->add_option("--target", sa.target_path, "profile target JSON");
  search->add_option("--jobs", sa.jobs, "worker threads (0 = all cores; env ROOTSPEC_JOBS)");
  search->add_option("-o,--output", sa.out_path, "output path (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "complementarity verdicts (exit 0 iff holds)");
  verify->add_option("--check", va.check,
                     "la-set|la-cross|golay|p-set|n-set|iff-pn|thm-components")
      ->required();
  verify->add_option("--spec", va.spec_path, "RootSpec JSON (LA checks)");
  verify->add_option("inputs", va.in_paths, "inputs JSON (one combined file, or one per item)")
      ->required()
      ->expected(1, 8);
  verify->add_option("-o,--output", va.out_path, "output path (default stdout)");

  std::string only;
  bool list = false;
  int vp_jobs = default_jobs();
  auto* paper = app.add_subcommand("verify-paper", "run the full theorem-check battery");
  paper->add_option("--only", only, "run a single named check");
  paper->add_flag("--list", list, "list check names and exit");
  paper->add_option("--jobs", vp_jobs, "worker threads for search-backed checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (transform->parsed()) return run_transform(ta);
    if (correlate->parsed()) return run_correlate(ca);
    if (classify->parsed()) return run_classify(cla);
    if (search->parsed()) return run_search(sa);
    if (verify->parsed()) return run_verify(va);
    if (paper->parsed()) return run_verify_paper(only, vp_jobs, list);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
