#pragma once

#include <string>
#include <vector>

#include "modcenter/classify.hpp"

namespace modcenter {

// A parsed instance specification: a base ring plus a carrier description.
// The carrier may be given by invariant factors, a presentation matrix, or a
// direct sum of carrier descriptions.
struct CarrierSpec {
  enum class Kind { invariant_factors, presentation, direct_sum } kind;
  std::vector<int64_t> factors;               // invariant_factors
  std::vector<std::vector<int64_t>> relations; // presentation rows
  std::vector<CarrierSpec> parts;              // direct_sum
};

struct InstanceSpec {
  std::string label;
  ScalarRing ring;
  CarrierSpec carrier;
};

// Parses the JSON text of an instance spec; throws ParseError with line and
// column on syntax errors and with a JSON path on semantic errors.
InstanceSpec parse_instance(const std::string& json_text);
std::string serialize_instance(const InstanceSpec& spec);

// Builds the module action (validates the ring/carrier combination).
ModuleAction instance_action(const InstanceSpec& spec);
// The direct-sum parts when the carrier is a direct sum (used by the
// per-instance direct-sum theorem checks); empty otherwise.
std::vector<ModuleAction> instance_parts(const InstanceSpec& spec);

// Full analysis of one instance as deterministic JSON text.
std::string analyze_instance(const InstanceSpec& spec, const Bounds& bounds, int depth = 5);

}  // namespace modcenter
