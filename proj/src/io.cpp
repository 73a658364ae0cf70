// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string &text, const std::string &what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    throw Error(ErrorCode::ParseError, what + " line " + std::to_string(line) +
                                           ": " + e.what());
  }
}

int require_int(const json &v, const std::string &field) {
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::ParseError, field + ": expected an integer");
  }
  return v.get<int>();
}

json complex_json(complex_t z) { return json::array({z.real(), z.imag()}); }

complex_t complex_from(const json &v, const std::string &field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw Error(ErrorCode::ParseError, field + ": expected [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

json matrix2_json(const Matrix2cd &u) {
  return json::array({json::array({complex_json(u(0, 0)), complex_json(u(0, 1))}),
                      json::array({complex_json(u(1, 0)), complex_json(u(1, 1))})});
}

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

}  // namespace

Graph parse_graph(const std::string &text) {
  const json doc = parse_json(text, "graph file");
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "graph file: expected an object");
  if (!doc.contains("nodes")) throw Error(ErrorCode::ParseError, "nodes: missing");
  if (!doc.contains("edges")) throw Error(ErrorCode::ParseError, "edges: missing");
  const int nodes = require_int(doc["nodes"], "nodes");
  if (nodes < 1) {
    throw Error(ErrorCode::ValidationError,
                "nodes: must be positive, got " + std::to_string(nodes));
  }
  const json &edges = doc["edges"];
  if (!edges.is_array()) throw Error(ErrorCode::ParseError, "edges: expected an array");

  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    const json &pair = edges[i];
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::ParseError, field + ": expected [j, k]");
    }
    const int a = require_int(pair[0], field + "[0]");
    const int b = require_int(pair[1], field + "[1]");
    for (int v : {a, b}) {
      if (v < 1 || v > nodes) {
        throw Error(ErrorCode::ValidationError,
                    field + ": node " + std::to_string(v) + " outside [1, " +
                        std::to_string(nodes) + "]");
      }
    }
    if (!seen.insert(make_edge(a, b)).second) {
      throw Error(ErrorCode::ValidationError,
                  field + ": duplicate edge {" + std::to_string(a) + "," +
                      std::to_string(b) + "}");
    }
  }
  return Graph::make_padded(nodes, std::move(seen));
}

std::string serialize_graph(const Graph &g) {
  json edges = json::array();
  for (const Edge &e : g.edges()) edges.push_back({e.first, e.second});
  json doc;
  doc["nodes"] = g.padded_from().value_or(g.n_nodes());
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

CoinSpec parse_coin_spec(const std::string &text) {
  const json doc = parse_json(text, "coin spec");
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "coin spec: expected an object");

  std::map<std::string, MatrixXcd> custom;
  if (doc.contains("custom")) {
    const json &c = doc["custom"];
    if (!c.is_object()) throw Error(ErrorCode::ParseError, "custom: expected an object");
    for (const auto &[name, entries] : c.items()) {
      const std::string field = "custom." + name;
      if (!entries.is_array() || entries.empty()) {
        throw Error(ErrorCode::ParseError, field + ": expected a list of [re, im]");
      }
      const auto dim = static_cast<int>(std::lround(std::sqrt(double(entries.size()))));
      if (static_cast<std::size_t>(dim) * dim != entries.size()) {
        throw Error(ErrorCode::ParseError,
                    field + ": " + std::to_string(entries.size()) +
                        " entries do not form a square matrix");
      }
      MatrixXcd m(dim, dim);
      for (int i = 0; i < dim * dim; ++i) {
        m(i / dim, i % dim) =
            complex_from(entries[i], field + "[" + std::to_string(i) + "]");
      }
      custom.emplace(name, std::move(m));
    }
  }

  auto resolve = [&](const json &v, const std::string &field) {
    if (!v.is_string()) throw Error(ErrorCode::ParseError, field + ": expected a name");
    const std::string name = v.get<std::string>();
    CoinChoice choice;
    choice.label = name;
    if (auto it = custom.find(name); it != custom.end()) {
      choice.family = CoinFamily::Custom;
      choice.matrix = it->second;
      return choice;
    }
    try {
      choice.family = coin_family_from_string(name);
    } catch (const Error &) {
      throw Error(ErrorCode::ParseError, field + ": unknown coin '" + name + "'");
    }
    if (choice.family == CoinFamily::Custom) {
      throw Error(ErrorCode::ParseError,
                  field + ": refer to a custom coin by its name");
    }
    return choice;
  };

  CoinSpec spec;
  if (doc.contains("default")) spec.base = resolve(doc["default"], "default");
  if (doc.contains("overrides")) {
    const json &o = doc["overrides"];
    if (!o.is_object()) throw Error(ErrorCode::ParseError, "overrides: expected an object");
    for (const auto &[key, value] : o.items()) {
      const std::string field = "overrides." + key;
      int node = 0;
      std::size_t used = 0;
      try {
        node = std::stoi(key, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != key.size() || node < 1) {
        throw Error(ErrorCode::ParseError, field + ": key must be a node index");
      }
      spec.overrides[node] = resolve(value, field);
    }
  }
  return spec;
}

std::string state_to_csv(const StateSpace &s) {
  std::string out = "j,k,re,im\n";
  for (int j = 1; j <= s.n(); ++j) {
    for (int k = 1; k <= s.n(); ++k) {
      out += std::to_string(j) + "," + std::to_string(k) + "," +
             fmt(s.at(j, k).real()) + "," + fmt(s.at(j, k).imag()) + "\n";
    }
  }
  return out;
}

std::string state_to_json(const StateSpace &s) {
  json states = json::array();
  for (int j = 1; j <= s.n(); ++j) {
    for (int k = 1; k <= s.n(); ++k) {
      states.push_back({{"j", j}, {"k", k}, {"re", s.at(j, k).real()},
                        {"im", s.at(j, k).imag()}});
    }
  }
  json doc;
  doc["n"] = s.n();
  doc["states"] = std::move(states);
  return doc.dump(1) + "\n";
}

std::string distributions_to_csv(const std::vector<NodeDistribution> &d) {
  std::string out = "step,node,probability\n";
  for (std::size_t step = 0; step < d.size(); ++step) {
    for (std::size_t j = 0; j < d[step].probs.size(); ++j) {
      out += std::to_string(step) + "," + std::to_string(j + 1) + "," +
             fmt(d[step].probs[j]) + "\n";
    }
  }
  return out;
}

std::string program_to_json(const CsdProgram &p) {
  json factors = json::array();
  for (const CsdFactor &f : p.factors) {
    json jf;
    jf["d"] = f.d;
    if (f.kind == FactorKind::General2) {
      jf["kind"] = "general2";
      json blocks = json::array();
      for (const Matrix2cd &b : f.blocks) blocks.push_back(matrix2_json(b));
      jf["blocks"] = std::move(blocks);
    } else {
      jf["kind"] = "cosine_sine";
      jf["angles"] = f.angles;
    }
    factors.push_back(std::move(jf));
  }
  json doc;
  doc["n"] = p.n;
  doc["factors"] = std::move(factors);
  return doc.dump(1) + "\n";
}

std::string schedule_to_json(const PulseSchedule &s) {
  json stages = json::array();
  for (const Stage &st : s.stages) {
    json rotations = json::array();
    for (const PairRotation &r : st.rotations) {
      rotations.push_back({{"p", r.p}, {"q", r.q}, {"u", matrix2_json(r.u)}});
    }
    json js;
    js["interval"] = st.interval;
    js["rotations"] = std::move(rotations);
    stages.push_back(std::move(js));
  }
  json doc;
  doc["n"] = s.n;
  doc["stages"] = std::move(stages);
  return doc.dump(1) + "\n";
}

PulseSchedule parse_schedule(const std::string &text) {
  const json doc = parse_json(text, "schedule");
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("stages") ||
      !doc["stages"].is_array()) {
    throw Error(ErrorCode::ParseError, "schedule: expected {n, stages}");
  }
  PulseSchedule s;
  s.n = require_int(doc["n"], "n");
  for (std::size_t i = 0; i < doc["stages"].size(); ++i) {
    const std::string field = "stages[" + std::to_string(i) + "]";
    const json &js = doc["stages"][i];
    if (!js.is_object() || !js.contains("interval") || !js.contains("rotations") ||
        !js["rotations"].is_array()) {
      throw Error(ErrorCode::ParseError, field + ": expected {interval, rotations}");
    }
    Stage st;
    st.interval = require_int(js["interval"], field + ".interval");
    for (std::size_t r = 0; r < js["rotations"].size(); ++r) {
      const std::string rf = field + ".rotations[" + std::to_string(r) + "]";
      const json &jr = js["rotations"][r];
      if (!jr.is_object() || !jr.contains("p") || !jr.contains("q") ||
          !jr.contains("u") || !jr["u"].is_array() || jr["u"].size() != 2) {
        throw Error(ErrorCode::ParseError, rf + ": expected {p, q, u}");
      }
      PairRotation rot{require_int(jr["p"], rf + ".p"),
                       require_int(jr["q"], rf + ".q"), Matrix2cd::Zero()};
      for (int a = 0; a < 2; ++a) {
        const json &row = jr["u"][a];
        if (!row.is_array() || row.size() != 2) {
          throw Error(ErrorCode::ParseError, rf + ".u: expected a 2x2 matrix");
        }
        for (int b = 0; b < 2; ++b) {
          rot.u(a, b) = complex_from(row[b], rf + ".u");
        }
      }
      st.rotations.push_back(rot);
    }
    s.stages.push_back(std::move(st));
  }
  return s;
}

std::string lattice_to_csv(const LatticeState &ls) {
  std::string out = "x,y,spin,re,im\n";
  for (int x = 0; x < ls.extent(); ++x) {
    for (int y = 0; y < ls.extent(); ++y) {
      for (Spin spin : {Spin::Ground, Spin::Excited}) {
        const complex_t a = ls.amp(x, y, spin);
        out += std::to_string(x) + "," + std::to_string(y) + "," +
               std::to_string(static_cast<int>(spin)) + "," + fmt(a.real()) +
               "," + fmt(a.imag()) + "\n";
      }
    }
  }
  return out;
}

std::string trace_to_json(const PairProtocolTrace &t) {
  json steps = json::array();
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    const LatticeState &ls = t.states[i];
    json sites = json::array();
    for (int x = 0; x < ls.extent(); ++x) {
      for (int y = 0; y < ls.extent(); ++y) {
        for (Spin spin : {Spin::Ground, Spin::Excited}) {
          const complex_t a = ls.amp(x, y, spin);
          if (a == complex_t(0.0)) continue;
          sites.push_back({{"x", x}, {"y", y}, {"spin", static_cast<int>(spin)},
                           {"amp", complex_json(a)}});
        }
      }
    }
    json js;
    js["step"] = i + 1;
    js["theta"] = i < t.thetas.size() ? t.thetas[i] : 0.0;
    js["sites"] = std::move(sites);
    steps.push_back(std::move(js));
  }
  return json{{"steps", std::move(steps)}}.dump(1) + "\n";
}

std::string distribution_svg(const NodeDistribution &d, const std::string &title) {
  const int n = static_cast<int>(d.probs.size());
  const int width = 640, height = 360, margin = 40;
  const double plot_w = width - 2.0 * margin;
  const double plot_h = height - 2.0 * margin;
  const double peak = std::max(1e-12, *std::max_element(d.probs.begin(), d.probs.end()));
  const double bar_w = plot_w / std::max(1, n);

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <text x=\"" << width / 2 << "\" y=\"" << margin / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
      << title << "</text>\n";
  for (int j = 0; j < n; ++j) {
    const double h = plot_h * d.probs[j] / peak;
    const double x = margin + j * bar_w;
    out << "  <rect x=\"" << x + 0.1 * bar_w << "\" y=\"" << margin + plot_h - h
        << "\" width=\"" << 0.8 * bar_w << "\" height=\"" << h
        << "\" fill=\"steelblue\"><title>node " << j + 1 << ": "
        << std::setprecision(6) << d.probs[j] << std::setprecision(2)
        << "</title></rect>\n";
    out << "  <text x=\"" << x + 0.5 * bar_w << "\" y=\"" << height - margin / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << j + 1 << "</text>\n";
  }
  out << "  <line x1=\"" << margin << "\" y1=\"" << margin + plot_h << "\" x2=\""
      << width - margin << "\" y2=\"" << margin + plot_h
      << "\" stroke=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  }
}

}  // namespace qwalk
