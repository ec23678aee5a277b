#include "modcenter/instance.hpp"

#include <json.hpp>

#include "modcenter/checks.hpp"
#include "modcenter/errors.hpp"

namespace modcenter {

using json = nlohmann::ordered_json;

namespace {

// nlohmann reports byte offsets; recover line/column for the spec'd
// positioned parse errors.
std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail_at(const std::string& path, const std::string& what) {
  throw ParseError("at " + path + ": " + what);
}

CarrierSpec parse_carrier(const json& j, const std::string& path) {
  if (!j.is_object()) fail_at(path, "carrier must be an object");
  CarrierSpec c;
  if (j.contains("invariant_factors")) {
    c.kind = CarrierSpec::Kind::invariant_factors;
    const json& f = j["invariant_factors"];
    if (!f.is_array()) fail_at(path + ".invariant_factors", "expected an array of integers");
    for (const auto& v : f) {
      if (!v.is_number_integer()) fail_at(path + ".invariant_factors", "expected integers");
      c.factors.push_back(v.get<int64_t>());
    }
    return c;
  }
  if (j.contains("presentation")) {
    c.kind = CarrierSpec::Kind::presentation;
    const json& rows = j["presentation"];
    if (!rows.is_array()) fail_at(path + ".presentation", "expected a matrix (array of rows)");
    for (const auto& row : rows) {
      if (!row.is_array()) fail_at(path + ".presentation", "expected a matrix (array of rows)");
      std::vector<int64_t> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) fail_at(path + ".presentation", "expected integers");
        r.push_back(v.get<int64_t>());
      }
      c.relations.push_back(std::move(r));
    }
    return c;
  }
  if (j.contains("direct_sum")) {
    c.kind = CarrierSpec::Kind::direct_sum;
    const json& parts = j["direct_sum"];
    if (!parts.is_array() || parts.empty())
      fail_at(path + ".direct_sum", "expected a nonempty array of carriers");
    for (size_t i = 0; i < parts.size(); ++i)
      c.parts.push_back(parse_carrier(parts[i], path + ".direct_sum[" + std::to_string(i) + "]"));
    return c;
  }
  fail_at(path, "carrier needs invariant_factors, presentation or direct_sum");
}

json carrier_to_json(const CarrierSpec& c) {
  json j = json::object();
  switch (c.kind) {
    case CarrierSpec::Kind::invariant_factors:
      j["invariant_factors"] = c.factors;
      break;
    case CarrierSpec::Kind::presentation:
      j["presentation"] = c.relations;
      break;
    case CarrierSpec::Kind::direct_sum: {
      json parts = json::array();
      for (const auto& p : c.parts) parts.push_back(carrier_to_json(p));
      j["direct_sum"] = std::move(parts);
      break;
    }
  }
  return j;
}

FinAbGroup carrier_group(const CarrierSpec& c, const std::string& path) {
  switch (c.kind) {
    case CarrierSpec::Kind::invariant_factors: {
      for (int64_t f : c.factors)
        if (f < 1) fail_at(path, "invariant factors must be positive");
      return FinAbGroup::from_orders(c.factors);
    }
    case CarrierSpec::Kind::presentation: {
      size_t gens = c.relations.empty() ? 0 : c.relations[0].size();
      for (const auto& row : c.relations)
        if (row.size() != gens) fail_at(path, "ragged presentation matrix");
      Mat rel(int(c.relations.size()), int(gens));
      for (size_t i = 0; i < c.relations.size(); ++i)
        for (size_t j = 0; j < gens; ++j) rel.at(int(i), int(j)) = c.relations[i][j];
      try {
        return group_from_presentation(rel, int(gens)).group;
      } catch (const InfiniteQuotient& e) {
        fail_at(path, e.what());
      }
    }
    case CarrierSpec::Kind::direct_sum: {
      std::vector<FinAbGroup> parts;
      for (size_t i = 0; i < c.parts.size(); ++i)
        parts.push_back(carrier_group(c.parts[i], path + ".direct_sum[" + std::to_string(i) + "]"));
      return direct_sum_group(parts).group;
    }
  }
  fail_at(path, "unreachable carrier kind");
}

json group_to_json(const FinAbGroup& g) {
  json j = json::object();
  j["invariant_factors"] = g.invariant_factors();
  j["order"] = g.order();
  return j;
}

json subgroup_to_json(const Subgroup& s) {
  json j = json::object();
  j["invariant_factors"] = s.basis().invariant_factors();
  j["order"] = s.order();
  json gens = json::array();
  for (const Element& e : s.basis_images()) gens.push_back(e.coords);
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace

InstanceSpec parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(json_text, e.byte > 0 ? size_t(e.byte - 1) : 0);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         e.what(),
                     line, col);
  }
  if (!j.is_object()) throw ParseError("instance spec must be a JSON object");

  InstanceSpec spec;
  if (j.contains("label")) {
    if (!j["label"].is_string()) fail_at("label", "label must be a string");
    spec.label = j["label"].get<std::string>();
  }
  if (!j.contains("ring")) fail_at("ring", "missing ring");
  const json& ring = j["ring"];
  if (ring.is_string() && ring.get<std::string>() == "Z") {
    spec.ring = ScalarRing{0};
  } else if (ring.is_object() && ring.contains("Zn")) {
    if (!ring["Zn"].is_number_integer()) fail_at("ring.Zn", "modulus must be an integer");
    int64_t n = ring["Zn"].get<int64_t>();
    if (n < 2) fail_at("ring.Zn", "modulus must be >= 2");
    spec.ring = ScalarRing{n};
  } else {
    fail_at("ring", "ring must be \"Z\" or {\"Zn\": n}");
  }
  if (!j.contains("carrier")) fail_at("carrier", "missing carrier");
  spec.carrier = parse_carrier(j["carrier"], "carrier");

  // Surface invalid ring/carrier combinations as positioned errors.
  FinAbGroup g = carrier_group(spec.carrier, "carrier");
  if (!spec.ring.is_integers() && spec.ring.modulus % g.exponent() != 0)
    fail_at("ring", "Z/" + std::to_string(spec.ring.modulus) +
                        " does not act on a carrier of exponent " + std::to_string(g.exponent()));
  return spec;
}

std::string serialize_instance(const InstanceSpec& spec) {
  json j = json::object();
  if (!spec.label.empty()) j["label"] = spec.label;
  if (spec.ring.is_integers())
    j["ring"] = "Z";
  else
    j["ring"] = json{{"Zn", spec.ring.modulus}};
  j["carrier"] = carrier_to_json(spec.carrier);
  return j.dump(2) + "\n";
}

ModuleAction instance_action(const InstanceSpec& spec) {
  return scalar_action(spec.ring, carrier_group(spec.carrier, "carrier"));
}

std::vector<ModuleAction> instance_parts(const InstanceSpec& spec) {
  if (spec.carrier.kind != CarrierSpec::Kind::direct_sum) return {};
  std::vector<ModuleAction> parts;
  for (size_t i = 0; i < spec.carrier.parts.size(); ++i)
    parts.push_back(scalar_action(
        spec.ring, carrier_group(spec.carrier.parts[i], "carrier.direct_sum")));
  return parts;
}

std::string analyze_instance(const InstanceSpec& spec, const Bounds& bounds, int depth) {
  ModuleAction a = instance_action(spec);
  std::vector<ModuleAction> parts = instance_parts(spec);
  CheckContext ctx = make_check_context(a, bounds, parts);

  json j = json::object();
  {
    json inst = json::parse(serialize_instance(spec));
    inst["carrier_normal_form"] = group_to_json(a.carrier);
    j["instance"] = std::move(inst);
  }
  {
    json s = group_to_json(ctx.s.ring().additive());
    s["commutative"] = ring_is_commutative(ctx.s.ring());
    j["end_ring"] = std::move(s);
  }
  j["center"] = subgroup_to_json(ctx.main_rep.center);
  j["commutator_image"] = subgroup_to_json(ctx.main_rep.commutator_image);
  {
    json t = group_to_json(ctx.t.ring().additive());
    t["commutative"] = ring_is_commutative(ctx.t.ring());
    j["biend"] = std::move(t);
  }
  {
    TowerResult tower = endo_tower(a, depth, bounds);
    json tw = json::object();
    json sizes = json::array(), flags = json::array();
    for (const auto& st : tower.stages) sizes.push_back(st.order());
    for (bool f : tower.commutative_flags) flags.push_back(f);
    tw["sizes"] = std::move(sizes);
    tw["commutative"] = std::move(flags);
    if (tower.stabilized_at)
      tw["stabilized_at"] = *tower.stabilized_at;
    else
      tw["stabilized_at"] = nullptr;
    tw["ecdim"] = ctx.ecdim_value ? json(*ctx.ecdim_value) : json("inf");
    tw["classification"] = ctx.tower_class.to_string();
    j["tower"] = std::move(tw);
  }
  {
    const ClassifierReport& c = ctx.cls;
    json cl = json::object();
    cl["multiplication"] = c.multiplication;
    cl["comultiplication"] = c.comultiplication;
    cl["d_module"] = c.d_module;
    cl["self_generator"] = c.self_generator;
    cl["dissimilar_semisimple"] = c.dissimilar_semisimple;
    cl["endo_extendable"] = c.endo_extendable;
    cl["quasi_injective"] = c.quasi_injective;
    cl["generator"] = c.generator;
    cl["faithful"] = c.faithful;
    cl["balanced"] = c.balanced;
    cl["torsion_subset_size"] = c.torsion_subset_size;
    cl["annihilator"] = annihilator_and_faithful(a).description;
    j["classifiers"] = std::move(cl);
  }
  {
    json th = json::object();
    for (const auto& check : instance_checks()) {
      CheckResult r = check.run(ctx);
      if (r.status == CheckResult::Status::violation)
        throw EquivalenceViolation(check.name + ": " + r.detail);
      th[check.name] = r.status == CheckResult::Status::pass ? "pass" : "vacuous";
    }
    if (!parts.empty()) {
      for (const auto& check : direct_sum_checks()) {
        CheckResult r = check.run(parts, bounds);
        if (r.status == CheckResult::Status::violation)
          throw EquivalenceViolation(check.name + ": " + r.detail);
        th[check.name] = r.status == CheckResult::Status::pass ? "pass" : "vacuous";
      }
    }
    j["theorems"] = std::move(th);
  }
  return j.dump(2) + "\n";
}

}  // namespace modcenter
