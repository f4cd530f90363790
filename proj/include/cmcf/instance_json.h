#ifndef CMCF_INSTANCE_JSON_H_
#define CMCF_INSTANCE_JSON_H_

#include <string>
#include <string_view>

#include "cmcf/network.h"

namespace cmcf {

// Canonical form:
//   {"nodes": [...],
//    "arcs": [{"tail", "head", "capacity", "cost": {"kind", "f", "d"?}}],
//    "commodities": [{"src", "dst", "bw"}],
//    "M": ...}
// Keys in this order, node references by name, reals with 17 significant
// digits, so equal instances give identical bytes. Black-box costs cannot be
// written (ConfigError).
std::string InstanceToJson(const Instance& inst);

// Throws ParseError on malformed JSON or ConfigError on invalid data.
Instance InstanceFromJson(std::string_view text);

Instance ReadInstanceFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

// %.17g, with "inf"/"nan" rejected (ConfigError).
std::string FormatReal(double v);

}  // namespace cmcf

#endif  // CMCF_INSTANCE_JSON_H_
