#include "thompsonf/report.hpp"

#include <algorithm>

#include "thompsonf/error.hpp"

namespace thompsonf {

namespace {

Json pair_json(std::int64_t x, std::int64_t y) { return Json::array({x, y}); }
Json pair_json(IntPair p) { return pair_json(p.x, p.y); }
Json pair_json(RectPair r) { return pair_json(r.a, r.b); }

Json breaks_json(const PLMap& f) {
  Json arr = Json::array();
  for (const auto& b : f.interior_breaks()) arr.push_back(Json::array({b.x.to_string(), b.y.to_string()}));
  return arr;
}

Json orbitals_json(const PLMap& f) {
  Json arr = Json::array();
  for (const auto& o : orbitals(f)) arr.push_back(Json::array({o.lo.to_string(), o.hi.to_string()}));
  return arr;
}

[[noreturn]] void bad_json(const std::string& what) { fail(ErrorCode::ParseError, what); }

std::string coordinate_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  bad_json("break coordinates must be strings like \"3/8\" or integers");
}

}  // namespace

Json element_to_json(const PLMap& f) {
  Json j = Json::object();
  j["breaks"] = breaks_json(f);
  return j;
}

PLMap element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("breaks") || !j["breaks"].is_array())
    bad_json("element must be an object with a \"breaks\" array");
  std::vector<Breakpoint> pts;
  for (const auto& p : j["breaks"]) {
    if (!p.is_array() || p.size() != 2) bad_json("each break must be a two-element array");
    pts.push_back({Dyadic::parse(coordinate_text(p[0])), Dyadic::parse(coordinate_text(p[1]))});
  }
  return PLMap::from_breaks(std::move(pts));
}

Environment environment_from_json(const Json& j, Environment base) {
  if (!j.is_object()) bad_json("environment must be an object mapping names to elements");
  for (const auto& [name, value] : j.items()) base.insert_or_assign(name, element_from_json(value));
  return base;
}

Json lattice_to_json(const LatticeSubgroup& L) { return Json{{"g", L.g()}, {"h", L.h()}, {"m", L.m()}}; }

Json generators_to_json(std::span<const IntPair> vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(pair_json(v));
  return Json{{"generators", arr}};
}

std::vector<IntPair> generators_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("generators")) bad_json("expected a \"generators\" array");
    arr = &j["generators"];
  }
  if (!arr->is_array()) bad_json("generators must be an array of integer pairs");
  std::vector<IntPair> out;
  for (const auto& p : *arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      bad_json("each generator must be a pair of integers");
    out.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
  }
  return out;
}

FIFSubgroup subgroup_from_json(const Json& j) {
  if (!j.is_object() || (!j.contains("phi_pairs") && !j.contains("elements")))
    bad_json("subgroup file needs \"phi_pairs\" and/or \"elements\"");
  std::vector<PLMap> elements;
  if (j.contains("elements")) {
    if (!j["elements"].is_array()) bad_json("\"elements\" must be an array");
    for (const auto& e : j["elements"]) elements.push_back(element_from_json(e));
  }
  std::vector<IntPair> pairs;
  if (j.contains("phi_pairs")) pairs = generators_from_json(j["phi_pairs"]);
  for (const auto& f : elements) {
    PhiImage p = phi(f);
    pairs.push_back({p.e0, p.e1});
  }
  FIFSubgroup H = from_phi_pairs(pairs);
  H.generators = std::move(elements);
  return H;
}

// ---------------------------------------------------------------------------

Json element_report(const PLMap& f) {
  PhiImage p = phi(f);
  Json j = element_to_json(f);
  j["phi"] = pair_json(p.e0, p.e1);
  j["orbitals"] = orbitals_json(f);
  j["identity"] = f.is_identity();
  return j;
}

Json phi_report(const PLMap& f) {
  PhiImage p = phi(f);
  return Json{{"phi", pair_json(p.e0, p.e1)}};
}

Json orbitals_report(const PLMap& f) { return Json{{"orbitals", orbitals_json(f)}}; }

Json value_report(const Rational& v) { return Json{{"value", v.to_string()}}; }

Json push_report(std::int64_t n, const Rational& image) {
  return Json{{"n", n}, {"image", image.to_string()}};
}

Json subgroup_report(const FIFSubgroup& H) {
  ExtensionSummary s = extension_summary(H);
  Json j = generators_to_json(H.phi_pairs);
  j["lattice"] = lattice_to_json(H.lattice);
  j["index"] = s.index_in_f;
  j["inner"] = pair_json(s.inner);
  j["outer"] = pair_json(outer_rect(H.lattice));
  j["residue"] = residue(H.lattice);
  j["quotient_generator"] = pair_json(s.quotient_generator);
  j["quotient_order"] = s.quotient_order;
  j["iso_to_F"] = s.iso_to_f;
  return j;
}

Json iso_report(const FIFSubgroup& H, const FIFSubgroup& H2) {
  IsoVerdict v = are_isomorphic(H, H2);
  Json j;
  j["isomorphic"] = v.isomorphic;
  j["witness"] = std::string(witness_name(v.witness));
  j["scaled_first"] = lattice_to_json(v.scaled_first);
  j["scaled_second"] = lattice_to_json(v.scaled_second);
  j["first"] = subgroup_report(H);
  j["second"] = subgroup_report(H2);
  return j;
}

Json enumerate_report(std::int64_t n) {
  Json subs = Json::array();
  auto all = enumerate_index(n);
  for (const auto& L : all) subs.push_back(lattice_to_json(L));
  return Json{{"index", n}, {"count", all.size()}, {"subgroups", subs}};
}

Json classify_report(std::int64_t n) {
  auto classes = classify_index(n);
  Json arr = Json::array();
  for (const auto& members : classes) {
    Json ms = Json::array();
    for (const auto& L : members) ms.push_back(lattice_to_json(L));
    const LatticeSubgroup& rep = members.front();
    arr.push_back(Json{{"key", lattice_to_json(isomorphism_key(rep))},
                       {"residue", residue(rep)},
                       {"iso_to_F", residue(rep) == 1},
                       {"members", ms}});
  }
  return Json{{"index", n}, {"class_count", classes.size()}, {"classes", arr}};
}

Json kab_report(std::int64_t a, std::int64_t b, std::optional<std::uint64_t> seed, const GeneratorPair& ys,
                const KabCertificate& cert) {
  Json j;
  j["a"] = a;
  j["b"] = b;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  j["y0"] = element_to_json(ys.first);
  j["y1"] = element_to_json(ys.second);
  j["commutator"] = element_to_json(cert.commutator);
  j["commutator_by_y0"] = element_to_json(cert.commutator_by_y0);
  j["commutator_by_y0y1inv"] = element_to_json(cert.commutator_by_y0y1inv);
  Json checks = Json::array();
  for (const auto& c : cert.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  j["all_passed"] = cert.all_passed();
  return j;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace {

std::string display_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

std::optional<std::string> inline_text(const Json& v) {
  switch (v.type()) {
    case Json::value_t::null: return "none";
    case Json::value_t::boolean: return v.get<bool>() ? "yes" : "no";
    case Json::value_t::string: return v.get<std::string>();
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
    case Json::value_t::number_float: return v.dump();
    case Json::value_t::object: {
      std::string s;
      for (const auto& [k, x] : v.items()) {
        if (!x.is_number()) return std::nullopt;
        s += (s.empty() ? "" : " ") + k + "=" + x.dump();
      }
      return s;
    }
    case Json::value_t::array: {
      if (v.empty()) return "none";
      const bool scalars = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
      std::vector<std::string> parts;
      for (const auto& x : v) {
        auto t = inline_text(x);
        if (!t) return std::nullopt;
        parts.push_back(*t);
      }
      std::string s;
      for (const auto& p : parts) s += (s.empty() ? "" : (scalars ? ", " : "; ")) + p;
      return scalars ? "(" + s + ")" : s;
    }
    default: return std::nullopt;
  }
}

void render_into(std::string& out, const Json& obj, const std::string& indent) {
  for (const auto& [k, v] : obj.items()) {
    if (auto t = inline_text(v)) {
      out += indent + display_key(k) + ": " + *t + "\n";
    } else if (v.is_object()) {
      out += indent + display_key(k) + ":\n";
      render_into(out, v, indent + "  ");
    } else {
      out += indent + display_key(k) + ":\n";
      for (const auto& item : v) {
        if (item.is_object()) {
          std::string sub;
          render_into(sub, item, indent + "    ");
          sub.replace(indent.size(), 4, "  - ");
          out += sub;
        } else {
          out += indent + "  - " + inline_text(item).value_or(item.dump()) + "\n";
        }
      }
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  if (report.is_object() && report.size() == 1) {
    if (auto t = inline_text(report.begin().value())) return *t + "\n";
  }
  if (!report.is_object()) return inline_text(report).value_or(report.dump()) + "\n";
  std::string out;
  render_into(out, report, "");
  return out;
}

}  // namespace thompsonf
