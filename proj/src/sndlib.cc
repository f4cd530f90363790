#include "cmcf/sndlib.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cmcf/errors.h"

namespace cmcf {
namespace {

struct Token {
  std::string text;
  int line = 0;
};

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '#' || (ch == '?' && (out.empty() || out.back().line != line))) {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ch == '(' || ch == ')') {
      out.push_back({std::string(1, ch), line});
      ++i;
    } else {
      size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != '(' && text[j] != ')' && text[j] != '#') {
        ++j;
      }
      out.push_back({std::string(text.substr(i, j - i)), line});
      i = j;
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  int line() const {
    if (tokens_.empty()) return 0;
    return pos_ < tokens_.size() ? tokens_[pos_].line : tokens_.back().line;
  }

  Token Next(const char* what) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what, line());
    return tokens_[pos_++];
  }
  void Expect(const char* text) {
    Token t = Next(text);
    if (t.text != text) {
      throw ParseError("expected '" + std::string(text) + "', found '" + t.text + "'",
                       t.line);
    }
  }
  double Number(const char* what) {
    Token t = Next(what);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError(std::string("expected ") + what + ", found '" + t.text + "'",
                       t.line);
    }
    return v;
  }
  bool At(const char* text) const { return !done() && peek().text == text; }

  // Skips a balanced parenthesized group starting at '('.
  void SkipGroup() {
    Expect("(");
    int depth = 1;
    while (depth > 0) {
      Token t = Next("')'");
      if (t.text == "(") ++depth;
      if (t.text == ")") --depth;
    }
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

RawInstance ParseSndlib(std::string_view text) {
  Reader in(Tokenize(text));
  RawInstance raw;
  std::set<std::string> node_set, link_ids, demand_ids;
  bool saw_nodes = false, saw_links = false, saw_demands = false;
  auto check_node = [&](const Token& t) {
    if (!node_set.count(t.text)) throw ParseError("unknown node '" + t.text + "'", t.line);
  };
  while (!in.done()) {
    Token section = in.Next("section name");
    if (section.text == "NODES") {
      saw_nodes = true;
      in.Expect("(");
      while (!in.At(")")) {
        Token id = in.Next("node id");
        if (id.text == "(") throw ParseError("malformed NODES record", id.line);
        if (!node_set.insert(id.text).second) {
          throw ParseError("duplicate node '" + id.text + "'", id.line);
        }
        raw.nodes.push_back(id.text);
        if (in.At("(")) in.SkipGroup();
      }
      in.Expect(")");
    } else if (section.text == "LINKS") {
      saw_links = true;
      in.Expect("(");
      while (!in.At(")")) {
        Token id = in.Next("link id");
        if (!link_ids.insert(id.text).second) {
          throw ParseError("duplicate link id '" + id.text + "'", id.line);
        }
        in.Expect("(");
        Token s = in.Next("link source");
        Token t = in.Next("link target");
        in.Expect(")");
        check_node(s);
        check_node(t);
        double pre_cap = in.Number("pre-installed capacity");
        double pre_cost = in.Number("pre-installed capacity cost");
        in.Number("routing cost");
        in.Number("setup cost");
        in.Expect("(");
        std::vector<double> modules;
        while (!in.At(")")) modules.push_back(in.Number("module value"));
        in.Expect(")");
        if (modules.size() % 2 != 0) {
          throw ParseError("odd module list for link '" + id.text + "'", id.line);
        }
        RawLink link{id.text, s.text, t.text, 0.0, std::nullopt};
        if (pre_cap > 0.0) {
          link.capacity = pre_cap;
          if (pre_cost > 0.0) link.cost = pre_cost;
        } else if (!modules.empty()) {
          link.capacity = modules[0];
          if (modules[1] > 0.0) link.cost = modules[1];
        }
        if (link.capacity < 0.0) {
          throw ParseError("negative capacity on link '" + id.text + "'", id.line);
        }
        raw.links.push_back(std::move(link));
      }
      in.Expect(")");
    } else if (section.text == "DEMANDS") {
      saw_demands = true;
      in.Expect("(");
      while (!in.At(")")) {
        Token id = in.Next("demand id");
        if (!demand_ids.insert(id.text).second) {
          throw ParseError("duplicate demand id '" + id.text + "'", id.line);
        }
        in.Expect("(");
        Token s = in.Next("demand source");
        Token t = in.Next("demand target");
        in.Expect(")");
        check_node(s);
        check_node(t);
        in.Number("routing unit");
        double value = in.Number("demand value");
        in.Next("max path length");
        if (!(value > 0.0)) {
          throw ParseError("demand '" + id.text + "' must have a positive value", id.line);
        }
        raw.demands.push_back({id.text, s.text, t.text, value});
      }
      in.Expect(")");
    } else if (in.At("(")) {
      in.SkipGroup();  // META, ADMISSIBLE_PATHS, ...
    } else {
      throw ParseError("malformed section '" + section.text + "'", section.line);
    }
  }
  if (!saw_nodes || !saw_links || !saw_demands) {
    throw ParseError("missing NODES, LINKS or DEMANDS section", 0);
  }
  raw.declared_links = static_cast<int>(raw.links.size());
  return raw;
}

RawInstance ReadSndlibFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  RawInstance raw = ParseSndlib(buf.str());
  std::string base = path.substr(path.find_last_of('/') + 1);
  raw.name = base.substr(0, base.find('.'));
  return raw;
}

RawInstance Symmetrize(const RawInstance& raw) {
  RawInstance out = raw;
  std::set<std::pair<std::string, std::string>> present;
  for (const RawLink& l : raw.links) present.insert({l.source, l.target});
  std::set<std::string> ids;
  for (const RawLink& l : raw.links) ids.insert(l.id);
  for (const RawLink& l : raw.links) {
    if (present.count({l.target, l.source})) continue;
    RawLink rev = l;
    std::swap(rev.source, rev.target);
    rev.id = l.id + "_rev";
    while (ids.count(rev.id)) rev.id += "_";
    ids.insert(rev.id);
    present.insert({rev.source, rev.target});
    out.links.push_back(std::move(rev));
  }
  return out;
}

RawInstance MergeCommodities(const RawInstance& raw) {
  RawInstance out = raw;
  out.demands.clear();
  std::map<std::pair<std::string, std::string>, size_t> index;
  for (const RawDemand& d : raw.demands) {
    auto key = std::make_pair(d.source, d.target);
    auto it = index.find(key);
    if (it == index.end()) {
      index[key] = out.demands.size();
      out.demands.push_back(d);
    } else {
      out.demands[it->second].value += d.value;
    }
  }
  return out;
}

CostKind ParseCostKind(std::string_view name) {
  if (name == "linear") return CostKind::kLinear;
  if (name == "quadratic") return CostKind::kQuadratic;
  if (name == "kleinrock") return CostKind::kKleinrock;
  throw ConfigError("unknown cost kind '" + std::string(name) + "'");
}

CostFunction CalibratedCost(CostKind kind, double capacity, double cost) {
  if (!(capacity > 0.0)) {
    throw CalibrationError("cannot calibrate a cost on a zero-capacity arc");
  }
  switch (kind) {
    case CostKind::kLinear:
      return CostFunction::Linear(cost / capacity);
    case CostKind::kQuadratic:
      return CostFunction::Quadratic(cost / (capacity * capacity));
    case CostKind::kKleinrock: {
      double d = 1.01 * capacity;
      return CostFunction::Kleinrock(cost * (d - capacity), d);
    }
    case CostKind::kBlackBox:
      break;
  }
  throw ConfigError("calibration supports linear, quadratic and kleinrock only");
}

Instance Calibrate(const RawInstance& raw, CostKind kind) {
  Network net;
  for (const std::string& n : raw.nodes) net.AddNode(n);
  for (const RawLink& l : raw.links) {
    double cost = l.cost.value_or(1.0);
    int s = *net.FindNode(l.source);
    int t = *net.FindNode(l.target);
    if (l.capacity == 0.0) {
      if (l.cost) throw CalibrationError("link '" + l.id + "' has zero capacity and a cost");
      // A zero-capacity link carries nothing; keep it with a nominal cost.
      net.AddArc(s, t, 0.0, kind == CostKind::kKleinrock
                                ? CostFunction::Kleinrock(1.0, 1.0)
                                : CalibratedCost(kind, 1.0, 1.0));
      continue;
    }
    net.AddArc(s, t, l.capacity, CalibratedCost(kind, l.capacity, cost));
  }
  std::vector<Commodity> commodities;
  for (const RawDemand& d : raw.demands) {
    int id = static_cast<int>(commodities.size());
    commodities.push_back({id, *net.FindNode(d.source), *net.FindNode(d.target), d.value});
  }
  return Instance(std::move(net), std::move(commodities));
}

}  // namespace cmcf
