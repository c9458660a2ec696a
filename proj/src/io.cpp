#include "ctag/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace ctag {

namespace {

struct Line {
  int number = 0;
  std::string text;
};

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Non-blank lines with comments removed. The first comment, if it precedes
/// all content, is returned separately.
std::vector<Line> content_lines(std::istream& in,
                                std::optional<std::string>* header = nullptr) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) {
      if (header && lines.empty() && !*header) {
        const auto name = strip(raw.substr(hash + 1));
        if (!name.empty()) *header = name;
      }
      raw.resize(hash);
    }
    auto text = strip(raw);
    if (!text.empty()) lines.push_back({number, std::move(text)});
  }
  return lines;
}

std::vector<long long> ints(const Line& line, std::size_t expected) {
  std::istringstream ss(line.text);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      throw ParseError(line.number, "expected an integer, got '" + tok + "'");
    }
    out.push_back(v);
  }
  if (expected > 0 && out.size() != expected) {
    throw ParseError(line.number, "expected " + std::to_string(expected) +
                                      " integers, got " +
                                      std::to_string(out.size()));
  }
  return out;
}

struct EdgeList {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

EdgeList read_edge_list(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "empty input, expected 'n m'");
  const auto head = ints(lines[0], 2);
  if (head[0] < 0 || head[0] > 1'000'000 || head[1] < 0) {
    throw ParseError(lines[0].number, "invalid header");
  }
  EdgeList list;
  list.n = static_cast<int>(head[0]);
  const auto m = static_cast<std::size_t>(head[1]);
  if (lines.size() - 1 != m) {
    const int at = lines.size() - 1 > m ? lines[m + 1].number
                                        : lines.back().number;
    throw ParseError(at, "header declares " + std::to_string(m) +
                             " edges, found " +
                             std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = ints(lines[i], 2);
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= list.n || uv[1] >= list.n) {
      throw ParseError(lines[i].number, "vertex id out of range");
    }
    if (uv[0] == uv[1]) throw ParseError(lines[i].number, "self-loop");
    list.edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  // Duplicates are reported against the line of the second occurrence.
  std::vector<std::pair<Edge, int>> seen;
  for (std::size_t i = 0; i < list.edges.size(); ++i) {
    seen.emplace_back(Edge(list.edges[i].first, list.edges[i].second),
                      lines[i + 1].number);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw ParseError(std::max(seen[i].second, seen[i - 1].second),
                       "duplicate edge");
    }
  }
  return list;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

const char* gate_name(GateKind k) {
  return k == GateKind::CPhase ? "CPHASE" : "SWAP";
}

}  // namespace

ProblemGraph read_problem_graph(std::istream& in) {
  auto list = read_edge_list(content_lines(in));
  return ProblemGraph(list.n, list.edges);
}

ProblemGraph read_problem_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_problem_graph(in);
}

void write_problem_graph(std::ostream& out, const ProblemGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Architecture read_architecture(std::istream& in,
                               const std::string& fallback_name) {
  std::optional<std::string> header;
  auto list = read_edge_list(content_lines(in, &header));
  std::vector<Edge> edges;
  for (auto [u, v] : list.edges) edges.emplace_back(u, v);
  return Architecture(header.value_or(fallback_name), list.n, edges);
}

Architecture read_architecture_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_architecture(in, "file:" + path);
}

void write_architecture(std::ostream& out, const Architecture& arch) {
  out << "# " << arch.name() << '\n';
  out << arch.num_qubits() << ' ' << arch.couplings().size() << '\n';
  for (const auto& e : arch.couplings()) out << e.u << ' ' << e.v << '\n';
}

Mapping read_mapping(std::istream& in) {
  const auto lines = content_lines(in);
  std::vector<int> pi(lines.size(), -1);
  for (const auto& line : lines) {
    const auto lp = ints(line, 2);
    if (lp[0] < 0 || lp[0] >= static_cast<long long>(pi.size())) {
      throw ParseError(line.number, "logical id out of range");
    }
    if (lp[1] < 0) throw ParseError(line.number, "negative physical id");
    if (pi[lp[0]] >= 0) throw ParseError(line.number, "logical id repeated");
    pi[lp[0]] = static_cast<int>(lp[1]);
  }
  return Mapping(std::move(pi));
}

void write_mapping(std::ostream& out, const Mapping& m) {
  for (int v = 0; v < m.size(); ++v) out << v << ' ' << m[v] << '\n';
}

LineEmbedding read_embedding(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.size() != 1) {
    throw ParseError(lines.empty() ? 0 : lines[1].number,
                     "embedding must be a single line");
  }
  LineEmbedding e;
  for (long long v : ints(lines[0], 0)) {
    if (v < 0) throw ParseError(lines[0].number, "negative qubit id");
    e.order.push_back(static_cast<int>(v));
  }
  return e;
}

void write_embedding(std::ostream& out, const LineEmbedding& e) {
  for (std::size_t i = 0; i < e.order.size(); ++i) {
    out << (i ? " " : "") << e.order[i];
  }
  out << '\n';
}

std::string schedule_to_text(const ScheduledCircuit& c) {
  std::ostringstream out;
  for (std::size_t t = 0; t < c.cycles.size(); ++t) {
    out << t << ':';
    for (const auto& g : c.cycles[t]) {
      out << ' ' << gate_name(g.kind) << '(' << g.a << ',' << g.b << ')';
    }
    out << '\n';
  }
  return out.str();
}

std::string schedule_to_json(const ScheduledCircuit& c) {
  nlohmann::ordered_json doc;
  doc["architecture"] = c.arch_name;
  doc["num_qubits"] = c.num_qubits;
  doc["init"] = c.init.values();
  auto cycles = nlohmann::ordered_json::array();
  for (const auto& cycle : c.cycles) {
    auto gates = nlohmann::ordered_json::array();
    for (const auto& g : cycle) {
      nlohmann::ordered_json j;
      j["gate"] = gate_name(g.kind);
      j["a"] = g.a;
      j["b"] = g.b;
      if (g.logical) j["logical"] = {g.logical->u, g.logical->v};
      gates.push_back(std::move(j));
    }
    cycles.push_back(std::move(gates));
  }
  doc["cycles"] = std::move(cycles);
  return doc.dump(1) + "\n";
}

ScheduledCircuit schedule_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  ScheduledCircuit c;
  try {
    c.arch_name = doc.at("architecture").get<std::string>();
    c.num_qubits = doc.at("num_qubits").get<int>();
    c.init = Mapping(doc.at("init").get<std::vector<int>>());
    for (const auto& cycle : doc.at("cycles")) {
      Cycle out;
      for (const auto& g : cycle) {
        const auto name = g.at("gate").get<std::string>();
        Gate gate;
        if (name == "CPHASE") {
          gate.kind = GateKind::CPhase;
        } else if (name == "SWAP") {
          gate.kind = GateKind::Swap;
        } else {
          throw ParseError(0, "unknown gate '" + name + "'");
        }
        gate.a = g.at("a").get<int>();
        gate.b = g.at("b").get<int>();
        if (g.contains("logical")) {
          const auto pair = g.at("logical").get<std::vector<int>>();
          if (pair.size() != 2) throw ParseError(0, "logical must be a pair");
          gate.logical = Edge(pair[0], pair[1]);
        }
        out.push_back(gate);
      }
      c.cycles.push_back(std::move(out));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed schedule: ") + e.what());
  }
  return c;
}

}  // namespace ctag
