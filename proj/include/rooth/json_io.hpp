#pragma once

// JSON readers/writers for every file format the CLI speaks.
//
//   function:  {"n":4, "k":2, "values":[0,1,...]}                (2^n values)
//              {"n":4, "k":2, "anf_components":["x1*x2","x1"]}   (a_0..a_{k-1})
//   root spec: {"n":4, "blocks":[{"indices":[0,2],"order":4}, ...]}
//   sequence:  {"entries":[1,1,1,-1]}
//   spectrum:  {"n":..,"k":..,"kind":..,"ring_order_exponent":m,
//               "normalization":"unnormalized","entries":[[c0,c1,...],...],
//               "entries_complex":[[re,im],...],"spec":{...}}
//   profile:   {"n":..,"ring_order_exponent":m,"values":[[c0,...],...]}
//   target:    {"ring_order_exponent":m,
//               "entries":[{"u":[0,1,0,1],"re":0,"im":-8}, ...],
//               "wildcards":[[...], ...]}
//   space:     {"n":..,"k":..,"base":{function},"free_component":i,
//               "degree_bound":d}   or   {"length":N} for Golay searches

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rooth/anf.hpp"
#include "rooth/correlations.hpp"
#include "rooth/gbf.hpp"
#include "rooth/root_spec.hpp"
#include "rooth/search.hpp"
#include "rooth/sequences.hpp"
#include "rooth/spectrum.hpp"

namespace rooth::io {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": malformed JSON (" + std::string(e.what()) + ")");
  }
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

namespace detail {

inline int require_int(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw std::invalid_argument("field '" + field + "': missing or not an integer");
  return j[field].get<int>();
}

inline BitVector bits_from_json(const json& arr, const std::string& field) {
  if (!arr.is_array()) throw std::invalid_argument("field '" + field + "': expected bit array");
  BitVector v;
  v.n = static_cast<int>(arr.size());
  for (const auto& b : arr) {
    const int x = b.get<int>();
    if (x != 0 && x != 1)
      throw std::invalid_argument("field '" + field + "': entries must be bits");
    v.bits.push_back(static_cast<std::uint8_t>(x));
  }
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// functions

inline GeneralizedBooleanFunction function_from_json(const json& j) {
  const int n = detail::require_int(j, "n");
  const int k = j.contains("k") ? detail::require_int(j, "k") : 1;
  if (j.contains("values")) {
    if (!j["values"].is_array())
      throw std::invalid_argument("field 'values': expected array");
    std::vector<std::uint8_t> v;
    for (const auto& e : j["values"]) {
      const long long x = e.get<long long>();
      if (x < 0 || x >= (1 << k))
        throw std::invalid_argument("field 'values': entry " + std::to_string(x) +
                                    " not in [0, 2^k)");
      v.push_back(static_cast<std::uint8_t>(x));
    }
    return GeneralizedBooleanFunction(n, k, std::move(v));
  }
  if (j.contains("anf_components")) {
    const auto& arr = j["anf_components"];
    if (!arr.is_array() || static_cast<int>(arr.size()) != k)
      throw std::invalid_argument("field 'anf_components': expected k ANF strings");
    std::vector<BooleanFunction> comps;
    for (const auto& s : arr)
      comps.push_back(boolean_from_anf_string(s.get<std::string>(), n));
    return compose_components(comps);
  }
  throw std::invalid_argument("function: need 'values' or 'anf_components'");
}

inline json function_to_json(const GeneralizedBooleanFunction& F) {
  json j;
  j["n"] = F.n;
  j["k"] = F.k;
  j["values"] = json::array();
  for (auto v : F.values) j["values"].push_back(static_cast<int>(v));
  json anf = json::array();
  for (const auto& comp : decompose_components(F))
    anf.push_back(anf_to_string(anf_from_truth_table(comp)));
  j["anf_components"] = anf;
  return j;
}

// ---------------------------------------------------------------------------
// root specs

inline RootSpec rootspec_from_json(const json& j) {
  RootSpec spec;
  spec.n = detail::require_int(j, "n");
  if (!j.contains("blocks") || !j["blocks"].is_array())
    throw std::invalid_argument("field 'blocks': missing or not an array");
  for (const auto& bj : j["blocks"]) {
    RootBlock b;
    if (!bj.contains("indices") || !bj["indices"].is_array())
      throw std::invalid_argument("field 'blocks.indices': missing or not an array");
    for (const auto& i : bj["indices"]) b.indices.push_back(i.get<int>());
    b.order = detail::require_int(bj, "order");
    spec.blocks.push_back(std::move(b));
  }
  spec.finalize();
  return spec;
}

inline json rootspec_to_json(const RootSpec& spec) {
  json j;
  j["n"] = spec.n;
  j["blocks"] = json::array();
  for (const auto& b : spec.blocks)
    j["blocks"].push_back({{"indices", b.indices}, {"order", b.order}});
  return j;
}

// ---------------------------------------------------------------------------
// sequences

inline BipolarSequence sequence_from_json(const json& j) {
  if (!j.contains("entries") || !j["entries"].is_array())
    throw std::invalid_argument("field 'entries': missing or not an array");
  std::vector<int> e;
  for (const auto& v : j["entries"]) e.push_back(v.get<int>());
  return BipolarSequence(std::move(e));
}

inline json sequence_to_json(const BipolarSequence& s) {
  return json{{"entries", s.entries}};
}

// ---------------------------------------------------------------------------
// spectra and profiles

inline json cyc_to_json(const CycElement& e) {
  json c = json::array();
  for (auto v : e.coeffs()) c.push_back(v);
  return c;
}

inline json spectrum_to_json(const Spectrum& S, bool with_complex = false) {
  json j;
  j["n"] = S.n;
  j["k"] = S.k;
  j["kind"] = to_string(S.kind);
  j["ring_order_exponent"] = S.ring_exponent;
  j["normalization"] = "unnormalized";
  if (S.spec) j["spec"] = rootspec_to_json(*S.spec);
  if (!S.entries.empty()) {
    j["entries"] = json::array();
    for (const auto& e : S.entries) j["entries"].push_back(cyc_to_json(e));
  }
  if (!S.entries_complex.empty() || with_complex) {
    j["entries_complex"] = json::array();
    if (!S.entries_complex.empty()) {
      for (const auto& e : S.entries_complex)
        j["entries_complex"].push_back({e.real(), e.imag()});
    } else {
      for (const auto& e : S.entries) {
        const auto z = e.to_complex();
        j["entries_complex"].push_back({z.real(), z.imag()});
      }
    }
  }
  return j;
}

inline Spectrum spectrum_from_json(const json& j) {
  Spectrum S;
  S.n = detail::require_int(j, "n");
  S.k = j.contains("k") ? detail::require_int(j, "k") : 1;
  S.ring_exponent = detail::require_int(j, "ring_order_exponent");
  const std::string kind = j.value("kind", "walsh");
  if (kind == "walsh") S.kind = TransformKind::walsh;
  else if (kind == "gwalsh") S.kind = TransformKind::generalized;
  else if (kind == "nega") S.kind = TransformKind::nega;
  else if (kind == "root") S.kind = TransformKind::root;
  else throw std::invalid_argument("field 'kind': unknown transform kind '" + kind + "'");
  if (j.contains("spec")) S.spec = rootspec_from_json(j["spec"]);
  if (j.contains("entries")) {
    for (const auto& ce : j["entries"]) {
      std::vector<std::int64_t> coeffs;
      for (const auto& v : ce) coeffs.push_back(v.get<std::int64_t>());
      if (coeffs.size() != CycElement::half_period(S.ring_exponent))
        throw std::invalid_argument("field 'entries': coefficient length inconsistent with "
                                    "ring_order_exponent");
      S.entries.emplace_back(S.ring_exponent, std::move(coeffs));
    }
  } else if (j.contains("entries_complex")) {
    for (const auto& ce : j["entries_complex"])
      S.entries_complex.emplace_back(ce[0].get<double>(), ce[1].get<double>());
  } else {
    throw std::invalid_argument("spectrum: need 'entries' or 'entries_complex'");
  }
  return S;
}

inline json profile_to_json(const CorrelationProfile& p, const std::string& kind) {
  json j;
  j["n"] = p.n;
  j["kind"] = kind;
  j["ring_order_exponent"] = p.ring_exponent;
  j["values"] = json::array();
  for (const auto& v : p.values) j["values"].push_back(cyc_to_json(v));
  json cx = json::array();
  for (const auto& v : p.values) {
    const auto z = v.to_complex();
    cx.push_back({z.real(), z.imag()});
  }
  j["values_complex"] = cx;
  return j;
}

// ---------------------------------------------------------------------------
// search inputs/outputs

inline SearchSpace space_from_json(const json& j) {
  SearchSpace sp;
  sp.n = detail::require_int(j, "n");
  sp.k = j.contains("k") ? detail::require_int(j, "k") : 1;
  if (j.contains("base")) {
    sp.base = function_from_json(j["base"]);
    sp.free_component = detail::require_int(j, "free_component");
  }
  if (j.contains("degree_bound") && !j["degree_bound"].is_null())
    sp.degree_bound = detail::require_int(j, "degree_bound");
  if (j.contains("candidates"))
    for (const auto& fj : j["candidates"]) sp.explicit_candidates.push_back(function_from_json(fj));
  sp.validate();
  return sp;
}

inline ProfileTarget target_from_json(const json& j, int n) {
  ProfileTarget t;
  t.n = n;
  t.ring_exponent = detail::require_int(j, "ring_order_exponent");
  if (j.contains("entries"))
    for (const auto& ej : j["entries"]) {
      const auto bits = detail::bits_from_json(ej.at("u"), "u");
      if (bits.n != n)
        throw std::invalid_argument("field 'u': expected " + std::to_string(n) + " bits");
      const Point u = bits.to_point();
      CycElement val;
      if (ej.contains("coeffs")) {
        std::vector<std::int64_t> coeffs;
        for (const auto& v : ej["coeffs"]) coeffs.push_back(v.get<std::int64_t>());
        val = CycElement(t.ring_exponent, std::move(coeffs));
      } else {
        const std::int64_t re = ej.value("re", 0);
        const std::int64_t im = ej.value("im", 0);
        if (im != 0 && t.ring_exponent < 2)
          throw std::invalid_argument("target: imaginary part needs ring_order_exponent >= 2");
        val = CycElement(re);
        if (im != 0)
          val = val + CycElement(im).lift(t.ring_exponent)
                          .times_zeta_pow(std::int64_t{1} << (t.ring_exponent - 2));
      }
      t.required[u] = val.lift(t.ring_exponent);
    }
  if (j.contains("wildcards"))
    for (const auto& wj : j["wildcards"]) {
      const auto bits = detail::bits_from_json(wj, "wildcards");
      if (bits.n != n)
        throw std::invalid_argument("field 'wildcards': expected " + std::to_string(n) + " bits");
      t.wildcards.push_back(bits.to_point());
    }
  return t;
}

inline json hits_to_json(const std::vector<GeneralizedBooleanFunction>& hits) {
  json j;
  j["count"] = hits.size();
  j["hits"] = json::array();
  for (const auto& f : hits) j["hits"].push_back(function_to_json(f));
  return j;
}

inline json pairs_to_json(const std::vector<std::pair<BipolarSequence, BipolarSequence>>& ps) {
  json j;
  j["count"] = ps.size();
  j["pairs"] = json::array();
  for (const auto& [a, b] : ps)
    j["pairs"].push_back({{"a", a.entries}, {"b", b.entries}});
  return j;
}

inline json class_to_json(const SpectralClass& c) {
  json j;
  j["class"] = c.describe();
  switch (c.kind) {
    case SpectralClass::Kind::bent: j["kind"] = "bent"; break;
    case SpectralClass::Kind::plateaued: j["kind"] = "plateaued"; j["s"] = c.s; break;
    case SpectralClass::Kind::landscape: j["kind"] = "landscape"; break;
    case SpectralClass::Kind::general: j["kind"] = "general"; break;
  }
  if (c.kind == SpectralClass::Kind::landscape || c.kind == SpectralClass::Kind::plateaued ||
      c.kind == SpectralClass::Kind::bent) {
    j["levels"] = json::array();
    for (auto [m, l] : c.levels) j["levels"].push_back({m, l});
    j["zero_in_spectrum"] = c.zero_in_spectrum;
    j["length"] = c.length;
  }
  if (!c.raw_magnitudes_sq.empty()) j["raw_magnitudes_sq"] = c.raw_magnitudes_sq;
  return j;
}

}  // namespace rooth::io
