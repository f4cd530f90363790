#include "cmcf/instance_json.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cmcf/errors.h"
#include "json.hpp"

namespace cmcf {
namespace {

std::string Quote(const std::string& s) {
  return nlohmann::json(s).dump();
}

}  // namespace

std::string FormatReal(double v) {
  if (!std::isfinite(v)) throw ConfigError("non-finite value in JSON output");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string InstanceToJson(const Instance& inst) {
  const Network& net = inst.network();
  std::string out = "{\n  \"nodes\": [";
  for (int v = 0; v < net.num_nodes(); ++v) {
    out += (v ? ", " : "") + Quote(net.node_name(v));
  }
  out += "],\n  \"arcs\": [";
  for (int a = 0; a < net.num_arcs(); ++a) {
    const Arc& arc = net.arc(a);
    const CostFunction& r = arc.cost;
    if (r.kind() == CostKind::kBlackBox) {
      throw ConfigError("black-box costs have no JSON form");
    }
    out += a ? ",\n    " : "\n    ";
    out += "{\"tail\": " + Quote(net.node_name(arc.tail)) +
           ", \"head\": " + Quote(net.node_name(arc.head)) +
           ", \"capacity\": " + FormatReal(arc.capacity) + ", \"cost\": {\"kind\": \"" +
           CostKindName(r.kind()) + "\", \"f\": " + FormatReal(r.f());
    if (r.kind() == CostKind::kKleinrock) out += ", \"d\": " + FormatReal(r.d());
    out += "}}";
  }
  out += net.num_arcs() ? "\n  ],\n" : "],\n";
  out += "  \"commodities\": [";
  for (int k = 0; k < inst.num_commodities(); ++k) {
    const Commodity& c = inst.commodity(k);
    out += k ? ",\n    " : "\n    ";
    out += "{\"src\": " + Quote(net.node_name(c.source)) +
           ", \"dst\": " + Quote(net.node_name(c.target)) +
           ", \"bw\": " + FormatReal(c.bandwidth) + "}";
  }
  out += inst.num_commodities() ? "\n  ],\n" : "],\n";
  out += "  \"M\": " + FormatReal(inst.penalty()) + "\n}\n";
  return out;
}

Instance InstanceFromJson(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("instance JSON: ") + e.what(), 0);
  }
  try {
    Network net;
    for (const auto& n : j.at("nodes")) net.AddNode(n.get<std::string>());
    auto node = [&](const nlohmann::json& v) {
      auto id = net.FindNode(v.get<std::string>());
      if (!id) throw ConfigError("unknown node '" + v.get<std::string>() + "'");
      return *id;
    };
    for (const auto& a : j.at("arcs")) {
      const auto& c = a.at("cost");
      std::string name = c.at("kind").get<std::string>();
      double f = c.at("f").get<double>();
      CostFunction cost = CostFunction::Linear(1.0);
      if (name == "linear") {
        cost = CostFunction::Linear(f);
      } else if (name == "quadratic") {
        cost = CostFunction::Quadratic(f);
      } else if (name == "kleinrock") {
        cost = CostFunction::Kleinrock(f, c.at("d").get<double>());
      } else {
        throw ConfigError("unknown cost kind '" + name + "'");
      }
      net.AddArc(node(a.at("tail")), node(a.at("head")), a.at("capacity").get<double>(),
                 cost);
    }
    std::vector<Commodity> commodities;
    for (const auto& c : j.at("commodities")) {
      int id = static_cast<int>(commodities.size());
      commodities.push_back({id, node(c.at("src")), node(c.at("dst")), c.at("bw").get<double>()});
    }
    if (j.contains("M")) {
      return Instance(std::move(net), std::move(commodities), j.at("M").get<double>());
    }
    return Instance(std::move(net), std::move(commodities));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what(), 0);
  }
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return InstanceFromJson(buf.str());
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

}  // namespace cmcf
