#include "kaleido/document.hpp"

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace kaleido {

using nlohmann::json;

namespace {

json trace_to_json(const ConstructionTrace& t) {
  json children = json::array();
  for (const auto& c : t.children) children.push_back(trace_to_json(c));
  return json{{"case", std::string(to_string(t.label))},
              {"n", t.n},
              {"k", t.k},
              {"children", std::move(children)}};
}

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::MalformedDocument, why);
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    malformed(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

ConstructionTrace trace_from_json(const json& j) {
  if (!j.is_object()) malformed("trace must be an object");
  if (!j.contains("case") || !j.at("case").is_string()) malformed("trace without case");
  auto label = parse_case_label(j.at("case").get<std::string>());
  if (!label) malformed("unknown case label " + j.at("case").get<std::string>());
  ConstructionTrace t{*label, int_field(j, "n"), int_field(j, "k"), {}, {}};
  if (j.contains("children")) {
    if (!j.at("children").is_array()) malformed("trace children must be an array");
    for (const auto& c : j.at("children")) t.children.push_back(trace_from_json(c));
  }
  return t;
}

}  // namespace

ColoringDocument make_document(const ColoredGraph& g, LabelTable labels,
                               const std::optional<ConstructionTrace>& trace) {
  ColoringDocument doc;
  doc.n = g.order();
  doc.k = g.palette();
  doc.edges = g.edges();
  std::sort(labels.begin(), labels.end());
  doc.labels = std::move(labels);
  if (trace) doc.trace = trace->stripped();
  return doc;
}

ColoredGraph to_graph(const ColoringDocument& doc) {
  return ColoredGraph::build(doc.n, doc.k, doc.edges);
}

std::string serialize(const ColoringDocument& doc) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << doc.schema_version << ",\n";
  out << "  \"n\": " << doc.n << ",\n";
  out << "  \"k\": " << doc.k << ",\n";
  out << "  \"edges\": [";
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const auto& e = doc.edges[i];
    out << (i ? ",\n" : "\n") << "    [" << e.u << ", " << e.v << ", " << e.color << "]";
  }
  out << (doc.edges.empty() ? "]" : "\n  ]");
  if (!doc.labels.empty()) {
    out << ",\n  \"labels\": {";
    for (std::size_t i = 0; i < doc.labels.size(); ++i) {
      out << (i ? ",\n" : "\n") << "    \"" << doc.labels[i].first
          << "\": " << json(doc.labels[i].second).dump();
    }
    out << "\n  }";
  }
  if (doc.trace) out << ",\n  \"trace\": " << trace_to_json(*doc.trace).dump();
  out << "\n}\n";
  return out.str();
}

ColoringDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!j.is_object()) malformed("top level must be an object");

  ColoringDocument doc;
  doc.schema_version = int_field(j, "schema_version");
  if (doc.schema_version != kSchemaVersion) {
    malformed("unsupported schema_version " + std::to_string(doc.schema_version));
  }
  doc.n = int_field(j, "n");
  doc.k = int_field(j, "k");
  if (!j.contains("edges") || !j.at("edges").is_array()) malformed("missing edges array");
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer()) {
      malformed("edge entries must be [u, v, color]");
    }
    doc.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  if (j.contains("labels")) {
    const auto& labels = j.at("labels");
    if (!labels.is_object()) malformed("labels must be an object");
    for (auto it = labels.begin(); it != labels.end(); ++it) {
      if (!it.value().is_string()) malformed("label values must be strings");
      int id = 0;
      try {
        std::size_t used = 0;
        id = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        malformed("label key '" + it.key() + "' is not a vertex id");
      }
      doc.labels.emplace_back(id, it.value().get<std::string>());
    }
    std::sort(doc.labels.begin(), doc.labels.end());
  }
  if (j.contains("trace")) doc.trace = trace_from_json(j.at("trace"));
  return doc;
}

ColoringDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_text_atomic(const std::filesystem::path& path, std::string_view text) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw Error(ErrorCode::Io, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::Io, "cannot rename onto " + path.string());
  }
}

std::string export_csv(const ColoredGraph& g) {
  std::ostringstream out;
  out << "vertex";
  for (int c = 1; c <= g.palette(); ++c) out << ",a_" << c;
  out << "\n";
  const auto tuples = multiset_colors(g);
  for (int v = 1; v <= g.order(); ++v) {
    out << v;
    for (int a : tuples[v - 1].counts) out << "," << a;
    out << "\n";
  }
  return out.str();
}

std::string export_dot(const ColoredGraph& g, const LabelTable& labels) {
  std::ostringstream out;
  out << "graph kaleidoscope {\n";
  for (int v = 1; v <= g.order(); ++v) {
    std::string name = std::to_string(v);
    for (const auto& [id, label] : labels)
      if (id == v) name = label;
    out << "  " << v << " [label=" << json(name).dump() << "];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [color=" << e.color << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace kaleido
