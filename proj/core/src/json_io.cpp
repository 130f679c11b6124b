#include "gml/json_io.hpp"

#include <algorithm>

#include "gml/errors.hpp"

namespace gml::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

Rational rational(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<std::int64_t>())));
  if (!j.is_string()) fail(std::string(what) + " must be a rational string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

Json rational_json(const Rational& r) { return to_string(r); }

Json strata_json(const StrataMap& strata) {
  Json out = Json::object();
  for (const auto& [key, value] : strata) {
    Json idx = divisor_indices(key);
    out[idx.dump()] = to_json(value);
  }
  return out;
}

StrataMap strata_from_json(const Json& j) {
  if (!j.is_object()) fail("strata must be an object keyed by \"[i,j,...]\"");
  StrataMap out;
  for (const auto& [key, value] : j.items()) {
    Json idx;
    try {
      idx = Json::parse(key);
    } catch (const nlohmann::json::exception&) {
      fail("bad strata key '" + key + "'");
    }
    if (!idx.is_array()) fail("bad strata key '" + key + "'");
    std::vector<std::uint32_t> indices;
    for (const auto& i : idx) {
      if (!i.is_number_integer() || i.get<std::int64_t>() < 1) {
        throw Error(ErrorKind::MalformedStrata, "bad divisor index in key '" + key + "'");
      }
      indices.push_back(static_cast<std::uint32_t>(std::min<std::int64_t>(i.get<std::int64_t>(), kMaxDivisors + 1)));
    }
    const DivisorSet s = divisor_set(indices);
    if (out.contains(s)) throw Error(ErrorKind::MalformedStrata, "duplicate strata key '" + key + "'");
    out.emplace(s, class_function_from_json(value));
  }
  return out;
}

Json affine_json(const AffineForm& a) { return Json::array({to_string(a.slope), to_string(a.intercept)}); }

AffineForm affine_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) fail(std::string(what) + " must be [slope, intercept]");
  return AffineForm{rational(j[0], what), rational(j[1], what)};
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({to_string(c), e}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& term : array(j, "polynomial")) {
    if (!term.is_array() || term.size() != 2) fail("polynomial terms must be [coeff, exp]");
    p.add_term(rational(term[0], "coefficient"), integer(term[1], "exponent"));
  }
  return p;
}

Json to_json(const ClassFunction& f) {
  Json classes = Json::array();
  for (const auto& c : f.classes()) {
    Json entry = Json::object();
    entry["num"] = to_json(c.num());
    entry["den"] = to_json(c.den());
    classes.push_back(std::move(entry));
  }
  Json out = Json::object();
  out["modulus"] = f.modulus();
  out["root_order"] = f.root_order();
  out["classes"] = std::move(classes);
  return out;
}

ClassFunction class_function_from_json(const Json& j) {
  const auto modulus = integer(field(j, "modulus"), "modulus");
  const auto root_order = integer(field(j, "root_order"), "root_order");
  if (modulus < 1 || root_order < 1) throw Error(ErrorKind::InvalidParams, "modulus and root_order must be positive");
  const Json& classes = array(field(j, "classes"), "classes");
  if (classes.size() != static_cast<std::size_t>(modulus)) fail("classes must have one entry per residue");
  std::vector<RationalFunction> fs;
  for (const auto& c : classes) {
    LaurentPoly num = laurent_from_json(field(c, "num"));
    LaurentPoly den = c.contains("den") ? laurent_from_json(c["den"]) : LaurentPoly::constant(Rational(1));
    if (den.is_zero()) throw Error(ErrorKind::InvalidParams, "zero denominator");
    fs.emplace_back(std::move(num), std::move(den));
  }
  return ClassFunction(modulus, root_order, std::move(fs));
}

Json to_json(const Extended& x) {
  if (const auto* f = std::get_if<ClassFunction>(&x)) return to_json(*f);
  return "infinite";
}

Extended extended_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "infinite") return Divergent{"read as infinite"};
    fail("expected a ClassFunction or \"infinite\"");
  }
  return class_function_from_json(j);
}

Json to_json(const MassPair& m) {
  Json out = Json::object();
  out["mass_v"] = to_json(m.mass_v);
  out["mass_w"] = to_json(m.mass_w);
  return out;
}

MassPair mass_pair_from_json(const Json& j) {
  return MassPair{extended_from_json(field(j, "mass_v")), extended_from_json(field(j, "mass_w"))};
}

Json to_json(const RepresentationSpec& spec) {
  Json generators = Json::array();
  for (const auto& g : spec.generators) {
    // Cycles of length >= 2, each starting at its smallest point.
    Json cycles = Json::array();
    std::vector<bool> seen(g.size(), false);
    for (std::uint32_t i = 0; i < g.size(); ++i) {
      if (seen[i] || g[i] == i) continue;
      Json cycle = Json::array();
      for (std::uint32_t k = i; !seen[k]; k = g[k]) {
        seen[k] = true;
        cycle.push_back(k + 1);
      }
      cycles.push_back(std::move(cycle));
    }
    generators.push_back(std::move(cycles));
  }
  Json matrices = Json::array();
  for (const auto& m : spec.matrices) {
    Json perm = Json::array();
    for (auto p : m.perm) perm.push_back(p + 1);
    Json entry = Json::object();
    entry["perm"] = std::move(perm);
    entry["exps"] = m.exps;
    matrices.push_back(std::move(entry));
  }
  Json rep = Json::object();
  rep["dim"] = spec.dim;
  rep["root_order"] = spec.root_order;
  rep["matrices"] = std::move(matrices);
  Json out = Json::object();
  out["degree"] = spec.degree;
  out["generators"] = std::move(generators);
  out["rep"] = std::move(rep);
  return out;
}

RepresentationSpec representation_from_json(const Json& j) {
  RepresentationSpec spec;
  const auto degree = integer(field(j, "degree"), "degree");
  if (degree < 1) throw Error(ErrorKind::InvalidParams, "degree must be positive");
  spec.degree = static_cast<std::size_t>(degree);
  for (const auto& g : array(field(j, "generators"), "generators")) {
    std::vector<std::vector<std::uint32_t>> cycles;
    for (const auto& c : array(g, "generator")) {
      std::vector<std::uint32_t> cycle;
      for (const auto& p : array(c, "cycle")) {
        const auto point = integer(p, "cycle entry");
        if (point < 1 || point > degree) throw Error(ErrorKind::InvalidParams, "cycle entry out of range");
        cycle.push_back(static_cast<std::uint32_t>(point));
      }
      cycles.push_back(std::move(cycle));
    }
    spec.generators.push_back(from_cycles(spec.degree, cycles));
  }
  const Json& rep = field(j, "rep");
  const auto dim = integer(field(rep, "dim"), "dim");
  const auto root_order = integer(field(rep, "root_order"), "root_order");
  if (dim < 1 || root_order < 1) throw Error(ErrorKind::InvalidParams, "dim and root_order must be positive");
  spec.dim = static_cast<std::size_t>(dim);
  spec.root_order = static_cast<std::uint32_t>(root_order);
  for (const auto& m : array(field(rep, "matrices"), "matrices")) {
    MonomialMatrix mat;
    for (const auto& p : array(field(m, "perm"), "perm")) {
      const auto image = integer(p, "perm entry");
      if (image < 1 || image > dim) throw Error(ErrorKind::InvalidParams, "perm entry out of range");
      mat.perm.push_back(static_cast<std::uint32_t>(image - 1));
    }
    for (const auto& e : array(field(m, "exps"), "exps")) {
      mat.exps.push_back(static_cast<std::uint32_t>(mod64(integer(e, "exps entry"), root_order)));
    }
    spec.matrices.push_back(std::move(mat));
  }
  return spec;
}

Json to_json(const RamificationProfile& p) {
  Json strata = Json::array();
  for (const auto& s : p.strata) {
    Json entry = Json::object();
    entry["count"] = to_json(s.count);
    entry["v"] = rational_json(s.v);
    entry["w"] = rational_json(s.w);
    strata.push_back(std::move(entry));
  }
  Json families = Json::array();
  for (const auto& f : p.families) {
    Json entry = Json::object();
    entry["i0"] = f.i0;
    entry["i1"] = f.i1 ? Json(*f.i1) : Json(nullptr);
    entry["coeff"] = to_json(f.coeff);
    entry["count_exp"] = affine_json(f.count_exp);
    entry["v_exp"] = affine_json(f.v_exp);
    entry["w_exp"] = affine_json(f.w_exp);
    families.push_back(std::move(entry));
  }
  Json out = Json::object();
  out["group_order"] = p.group_order;
  out["strata"] = std::move(strata);
  out["families"] = std::move(families);
  return out;
}

RamificationProfile profile_from_json(const Json& j) {
  RamificationProfile p;
  p.group_order = integer(field(j, "group_order"), "group_order");
  if (p.group_order < 1) throw Error(ErrorKind::InvalidParams, "group_order must be positive");
  if (j.contains("strata")) {
    for (const auto& s : array(j["strata"], "strata")) {
      p.strata.push_back(ProfileStratum{class_function_from_json(field(s, "count")), rational(field(s, "v"), "v"),
                                        rational(field(s, "w"), "w")});
    }
  }
  if (j.contains("families")) {
    for (const auto& f : array(j["families"], "families")) {
      GeometricFamily fam;
      fam.i0 = integer(field(f, "i0"), "i0");
      if (f.contains("i1") && !f["i1"].is_null()) fam.i1 = integer(f["i1"], "i1");
      fam.coeff = laurent_from_json(field(f, "coeff"));
      fam.count_exp = affine_from_json(field(f, "count_exp"), "count_exp");
      fam.v_exp = affine_from_json(field(f, "v_exp"), "v_exp");
      fam.w_exp = affine_from_json(field(f, "w_exp"), "w_exp");
      p.families.push_back(std::move(fam));
    }
  }
  return p;
}

Json to_json(const ResolutionData& r) {
  Json horizontal = Json::array();
  for (const auto& c : r.horizontal) horizontal.push_back(Json{{"c", rational_json(c)}});
  Json vertical = Json::array();
  for (const auto& v : r.vertical) {
    Json entry = Json::object();
    entry["a"] = rational_json(v.a);
    entry["strata"] = strata_json(v.strata);
    vertical.push_back(std::move(entry));
  }
  Json out = Json::object();
  out["dim"] = r.dim;
  out["mode"] = r.mode == StrataMode::Open ? "open" : "closed";
  out["horizontal"] = std::move(horizontal);
  out["vertical"] = std::move(vertical);
  out["strata"] = strata_json(r.strata);
  return out;
}

ResolutionData resolution_from_json(const Json& j) {
  ResolutionData r;
  r.dim = integer(field(j, "dim"), "dim");
  const Json& mode = field(j, "mode");
  if (mode == "open") {
    r.mode = StrataMode::Open;
  } else if (mode == "closed") {
    r.mode = StrataMode::Closed;
  } else {
    fail("mode must be \"open\" or \"closed\"");
  }
  if (j.contains("horizontal")) {
    for (const auto& h : array(j["horizontal"], "horizontal")) r.horizontal.push_back(rational(field(h, "c"), "c"));
  }
  if (j.contains("vertical")) {
    for (const auto& v : array(j["vertical"], "vertical")) {
      r.vertical.push_back(VerticalDivisor{rational(field(v, "a"), "a"), strata_from_json(field(v, "strata"))});
    }
  }
  r.strata = strata_from_json(field(j, "strata"));
  validate(r);
  return r;
}

Json to_json(const DualityReport& r) {
  Json out = Json::object();
  out["strong"] = r.strong;
  out["weak"] = r.weak;
  out["dim"] = r.dim;
  out["strong_residual"] = to_json(r.strong_residual);
  out["weak_residual"] = to_json(r.weak_residual);
  return out;
}

DualityReport report_from_json(const Json& j) {
  DualityReport r;
  const Json& strong = field(j, "strong");
  const Json& weak = field(j, "weak");
  if (!strong.is_boolean() || !weak.is_boolean()) fail("strong and weak must be booleans");
  r.strong = strong.get<bool>();
  r.weak = weak.get<bool>();
  r.dim = integer(field(j, "dim"), "dim");
  r.strong_residual = class_function_from_json(field(j, "strong_residual"));
  r.weak_residual = class_function_from_json(field(j, "weak_residual"));
  return r;
}

}  // namespace gml::json
