/* Copyright 2026 The Weilv Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "weilv/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace weilv {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& source, const std::string& where,
                          const std::string& message) {
  throw UsageError(source + ": " + where + ": " + message);
}

const Json& member(const std::string& source, const Json& obj,
                   const std::string& path, const std::string& key) {
  if (!obj.is_object()) fail_at(source, path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    fail_at(source, path, "missing required field \"" + key + "\"");
  }
  return *it;
}

std::int64_t as_int(const std::string& source, const Json& v,
                    const std::string& path) {
  if (!v.is_number_integer()) fail_at(source, path, "expected an integer");
  return v.get<std::int64_t>();
}

std::string as_string(const std::string& source, const Json& v,
                      const std::string& path) {
  if (!v.is_string()) fail_at(source, path, "expected a string");
  return v.get<std::string>();
}

std::uint64_t reduce_mod_p(std::int64_t v, std::uint64_t p) {
  const std::int64_t m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

FieldElement parse_coefficient(const std::string& source, const Json& v,
                               const std::string& path,
                               const FieldCtxPtr& ctx) {
  const std::uint64_t p = ctx->characteristic();
  if (v.is_number_integer()) {
    return FieldElement::constant(ctx,
                                  reduce_mod_p(v.get<std::int64_t>(), p));
  }
  if (!v.is_array()) {
    fail_at(source, path,
            "expected a coefficient: an integer or an array of integers");
  }
  if (static_cast<int>(v.size()) > ctx->degree()) {
    std::ostringstream msg;
    msg << "coefficient vector has " << v.size()
        << " entries but the base field has degree " << ctx->degree();
    fail_at(source, path, msg.str());
  }
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    coeffs.push_back(reduce_mod_p(
        as_int(source, v[i], path + "/" + std::to_string(i)), p));
  }
  return FieldElement::from_coeffs(ctx, coeffs);
}

MultiPoly parse_equation(const std::string& source, const Json& eq,
                         const std::string& path, const FieldCtxPtr& ctx,
                         int ncoords) {
  if (!eq.is_array()) {
    fail_at(source, path, "expected an equation: an array of terms");
  }
  MultiPoly f(ctx, ncoords);
  for (std::size_t t = 0; t < eq.size(); ++t) {
    const std::string tpath = path + "/" + std::to_string(t);
    const Json& term = eq[t];
    if (!term.is_array() || term.size() != 2) {
      fail_at(source, tpath, "expected a term: [[exponents...], coeff]");
    }
    const Json& exps = term[0];
    if (!exps.is_array() || static_cast<int>(exps.size()) != ncoords) {
      std::ostringstream msg;
      msg << "expected " << ncoords << " exponents (one per coordinate)";
      fail_at(source, tpath + "/0", msg.str());
    }
    MultiPoly::ExpVec ev;
    ev.reserve(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      const std::string epath = tpath + "/0/" + std::to_string(i);
      const std::int64_t e = as_int(source, exps[i], epath);
      if (e < 0) fail_at(source, epath, "exponent must be non-negative");
      ev.push_back(static_cast<std::uint32_t>(e));
    }
    f.add_term(ev, parse_coefficient(source, term[1], tpath + "/1", ctx));
  }
  return f;
}

// ---- serialization helpers --------------------------------------------------------

std::string int_str(const Int& v) { return v.get_str(); }

std::string rat_str(const Rat& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Json int_vector(const std::vector<Int>& values) {
  Json out = Json::array();
  for (const Int& v : values) out.push_back(int_str(v));
  return out;
}

Json coeff_list(const IntPoly& p) {
  Json out = Json::array();
  for (const Int& c : p.coeffs()) out.push_back(int_str(c));
  return out;
}

const char* stage_name(ReportStage stage) {
  switch (stage) {
    case ReportStage::kCount:
      return "count";
    case ReportStage::kZeta:
      return "zeta";
    case ReportStage::kWeil:
      return "weil";
  }
  return "unknown";
}

Json options_block(const RunEcho& echo) {
  Json opt = Json::object();
  if (echo.depth) opt["depth"] = *echo.depth;
  if (echo.num_degree) {
    opt["num_degree"] = *echo.num_degree;
  } else if (echo.den_degree || echo.depth) {
    opt["num_degree"] = nullptr;
  }
  if (echo.den_degree) {
    opt["den_degree"] = *echo.den_degree;
  } else if (echo.num_degree || echo.depth) {
    opt["den_degree"] = nullptr;
  }
  if (echo.tol) opt["tol"] = *echo.tol;
  opt["budget"] = echo.budget;
  if (echo.threads) opt["threads"] = *echo.threads;
  if (echo.assume_smooth) opt["assume_smooth"] = *echo.assume_smooth;
  if (echo.limit) opt["limit"] = *echo.limit;
  if (echo.vars) opt["vars"] = *echo.vars;
  if (echo.field) opt["field"] = *echo.field;
  if (echo.shift) opt["shift"] = *echo.shift;
  return opt;
}

Json envelope(const RunEcho& echo) {
  Json doc = Json::object();
  doc["tool"] = "weilv";
  doc["format"] = 1;
  doc["command"] = echo.command;
  if (!echo.input_path.empty()) doc["input_path"] = echo.input_path;
  doc["options"] = options_block(echo);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json verdict_block(Verdict v, const std::string& note) {
  Json out = Json::object();
  out["verdict"] = std::string(verdict_name(v));
  out["note"] = note;
  return out;
}

}  // namespace

// ---- input ---------------------------------------------------------------------------

VarietySpec parse_variety(const std::string& json_text,
                          const std::string& source_name) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_at(source_name, "byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) fail_at(source_name, "/", "expected a JSON object");

  const std::string label =
      as_string(source_name, member(source_name, doc, "/", "label"), "/label");

  const std::int64_t p_raw =
      as_int(source_name, member(source_name, doc, "/", "p"), "/p");
  if (p_raw < 2 || !is_prime_u64(static_cast<std::uint64_t>(p_raw))) {
    fail_at(source_name, "/p", "characteristic must be a prime");
  }
  const std::uint64_t p = static_cast<std::uint64_t>(p_raw);

  std::int64_t a = 1;
  if (doc.contains("a")) {
    a = as_int(source_name, doc["a"], "/a");
    if (a < 1 || a > kMaxExtensionDegree) {
      std::ostringstream msg;
      msg << "base field degree must be in [1, " << kMaxExtensionDegree
          << "]";
      fail_at(source_name, "/a", msg.str());
    }
  }

  const Json& ambient_json = member(source_name, doc, "/", "ambient");
  const std::string kind_str = as_string(
      source_name, member(source_name, ambient_json, "/ambient", "kind"),
      "/ambient/kind");
  Ambient ambient;
  if (kind_str == "affine") {
    ambient.kind = AmbientKind::kAffine;
  } else if (kind_str == "projective") {
    ambient.kind = AmbientKind::kProjective;
  } else {
    fail_at(source_name, "/ambient/kind",
            "expected \"affine\" or \"projective\"");
  }
  const std::int64_t dim = as_int(
      source_name, member(source_name, ambient_json, "/ambient", "dim"),
      "/ambient/dim");
  if (dim < 1 || dim > 16) {
    fail_at(source_name, "/ambient/dim", "dimension must be in [1, 16]");
  }
  ambient.dim = static_cast<int>(dim);

  FieldCtxPtr ctx;
  try {
    ctx = FieldCtx::make(p, static_cast<int>(a));
  } catch (const Error& e) {
    fail_at(source_name, "/p", e.what());
  }

  const int ncoords = ambient.kind == AmbientKind::kAffine
                          ? ambient.dim
                          : ambient.dim + 1;
  std::vector<MultiPoly> equations;
  const Json& eqs = member(source_name, doc, "/", "equations");
  if (!eqs.is_array()) {
    fail_at(source_name, "/equations", "expected an array of equations");
  }
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    equations.push_back(parse_equation(source_name, eqs[i],
                                       "/equations/" + std::to_string(i),
                                       ctx, ncoords));
  }

  try {
    return VarietySpec(label, ctx, ambient, std::move(equations));
  } catch (const Error& e) {
    fail_at(source_name, "/equations", e.what());
  }
}

VarietySpec load_variety(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot open input file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw UsageError(path + ": error reading input file");
  }
  return parse_variety(buffer.str(), path);
}

// ---- output --------------------------------------------------------------------------

std::string report_json(const RunEcho& echo, const WeilReport& report) {
  Json doc = envelope(echo);

  Json input = Json::object();
  input["label"] = report.label;
  Json field = Json::object();
  field["cardinality"] = int_str(report.q);
  input["field"] = std::move(field);
  input["ambient"] = Json::object();
  input["ambient"]["kind"] = report.projective ? "projective" : "affine";
  input["ambient"]["dim"] = report.ambient_dim;
  input["equations"] = report.equation_count;
  input["dimension"] = report.dimension;
  input["stage"] = stage_name(report.stage);
  doc["input"] = std::move(input);

  Json counts = Json::object();
  counts["depth"] = report.counts.depth();
  counts["values"] = int_vector(report.counts.counts);
  doc["counts"] = std::move(counts);

  Json census = verdict_block(report.census_integrality, report.census_note);
  census["by_degree"] = int_vector(report.census.by_degree);
  doc["closed_points"] = std::move(census);

  if (report.stage != ReportStage::kCount) {
    Json zeta = Json::object();
    Json series = Json::array();
    for (const Rat& c : report.series) series.push_back(rat_str(c));
    zeta["series"] = std::move(series);
    zeta["definition_equivalence"] =
        std::string(verdict_name(report.definition_equivalence));
    Json rationality =
        verdict_block(report.rationality, report.rationality_note);
    rationality["num_degree"] =
        report.num_degree >= 0 ? Json(report.num_degree) : Json(nullptr);
    rationality["den_degree"] =
        report.den_degree >= 0 ? Json(report.den_degree) : Json(nullptr);
    zeta["rationality"] = std::move(rationality);
    zeta["integrality"] =
        verdict_block(report.integrality, report.integrality_note);
    if (report.has_zeta) {
      Json fn = Json::object();
      fn["numerator"] = coeff_list(report.zeta.numerator);
      fn["denominator"] = coeff_list(report.zeta.denominator);
      zeta["function"] = std::move(fn);
    } else {
      zeta["function"] = nullptr;
    }
    doc["zeta"] = std::move(zeta);
  }

  if (report.stage == ReportStage::kWeil) {
    Json weil = Json::object();
    Json fe = verdict_block(report.functional_equation, report.fe_note);
    fe["sign"] = report.fe_sign;
    fe["chi"] = report.chi;
    weil["functional_equation"] = std::move(fe);
    weil["riemann_hypothesis"] =
        verdict_block(report.riemann_hypothesis, report.rh_note);
    Json weights = verdict_block(report.weights, report.weights_note);
    Json betti = Json::object();
    for (const auto& [weight, count] : report.betti) {
      betti[std::to_string(weight)] = count;
    }
    weights["betti"] = std::move(betti);
    weights["alternating_sum"] = report.betti_alternating_sum;
    weil["weights"] = std::move(weights);
    Json roots = Json::array();
    for (const RootRow& row : report.roots) {
      Json r = Json::object();
      r["re"] = row.alpha.real();
      r["im"] = row.alpha.imag();
      r["abs"] = row.abs_value;
      r["weight"] = row.weight;
      r["deviation"] = row.deviation;
      r["factor"] = row.from_denominator ? "denominator" : "numerator";
      r["multiplicity"] = row.multiplicity;
      roots.push_back(std::move(r));
    }
    weil["roots"] = std::move(roots);
    Json curve = Json::object();
    curve["is_curve"] = report.is_curve;
    curve["genus"] = report.genus;
    weil["curve"] = std::move(curve);
    Json bounds = Json::array();
    for (const BoundCheckRow& row : report.bounds) {
      Json b = Json::object();
      b["name"] = row.name;
      b["verdict"] = std::string(verdict_name(row.verdict));
      b["witness"] = row.witness;
      bounds.push_back(std::move(b));
    }
    weil["bounds"] = std::move(bounds);
    doc["weil"] = std::move(weil);
  }

  Json assumptions = Json::array();
  for (const std::string& a : report.assumptions) assumptions.push_back(a);
  doc["assumptions"] = std::move(assumptions);
  doc["status"] = report.any_failure ? "fail" : "pass";
  return dump(doc);
}

std::string charsum_json(const RunEcho& echo, const std::string& kind,
                         const CharacterSumResult& result) {
  Json doc = envelope(echo);
  Json cs = Json::object();
  cs["kind"] = kind;
  cs["applicable"] = result.applicable;
  cs["terms"] = result.terms;
  Json value = Json::object();
  value["re"] = result.value.real();
  value["im"] = result.value.imag();
  cs["value"] = std::move(value);
  cs["magnitude"] = result.magnitude;
  cs["bound"] = result.bound;
  cs["margin"] = result.margin;
  cs["eps_num"] = result.eps_num;
  if (kind == "exponential-sum") {
    Json lf = Json::object();
    lf["checked_depth"] = result.leading_form_checked_depth;
    lf["suspect"] = result.leading_form_suspect;
    cs["leading_form"] = std::move(lf);
  }
  cs["verdict"] = result.applicable
                      ? (result.pass ? "pass" : "fail")
                      : "not-applicable";
  doc["charsum"] = std::move(cs);
  doc["status"] = !result.applicable || result.pass ? "pass" : "fail";
  return dump(doc);
}

std::string tau_json(const RunEcho& echo, const TauReport& report) {
  Json doc = envelope(echo);
  Json cs = Json::object();
  cs["kind"] = "ramanujan-tau";
  cs["tau"] = int_vector(report.tau);
  Json primes = Json::array();
  for (const TauPrimeCheck& check : report.primes) {
    Json row = Json::object();
    row["p"] = check.p;
    row["tau"] = int_str(check.tau);
    row["tau_sq"] = int_str(check.tau_sq);
    row["bound"] = int_str(check.bound);
    row["verdict"] = check.pass ? "pass" : "fail";
    primes.push_back(std::move(row));
  }
  cs["primes"] = std::move(primes);
  cs["verdict"] = report.all_pass ? "pass" : "fail";
  doc["charsum"] = std::move(cs);
  doc["status"] = report.all_pass ? "pass" : "fail";
  return dump(doc);
}

}  // namespace weilv
