#include "kaleido/document.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "kaleido/complete.hpp"
#include "kaleido/regular3.hpp"

namespace kaleido {
namespace {

namespace fs = std::filesystem;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Io;
}

TEST(Document, RoundTripIsByteStable) {
  const auto r = construct_complete(12, 5);
  const auto doc = make_document(r.graph, r.trace.labels, r.trace);
  const auto text = serialize(doc);
  const auto back = parse_document(text);
  EXPECT_EQ(back, doc);
  EXPECT_EQ(serialize(back), text);
  EXPECT_EQ(to_graph(back), r.graph);
  ASSERT_TRUE(back.trace);
  EXPECT_EQ(back.trace->label, CaseLabel::Case2EvenGeneral);
  EXPECT_EQ(back.trace->children.size(), 1u);
}

TEST(Document, RoundTripWithoutTraceOrLabels) {
  const auto g = construct_regular3(7);
  const auto doc = make_document(g);
  const auto text = serialize(doc);
  EXPECT_EQ(text.find("\"trace\""), std::string::npos);
  EXPECT_EQ(text.find("\"labels\""), std::string::npos);
  EXPECT_EQ(serialize(parse_document(text)), text);

  const auto labelled = make_document(g, regular3_labels(7));
  EXPECT_EQ(parse_document(serialize(labelled)), labelled);
}

TEST(Document, OneEdgePerLine) {
  const auto text = serialize(make_document(construct_complete(6, 3).graph));
  EXPECT_NE(text.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_NE(text.find("\n    [1, 2, "), std::string::npos);
  std::istringstream in(text);
  int edge_lines = 0;
  for (std::string line; std::getline(in, line);) edge_lines += line.rfind("    [", 0) == 0;
  EXPECT_EQ(edge_lines, 15);
}

TEST(Document, MalformedInputs) {
  const auto good = serialize(make_document(construct_complete(6, 3).graph));
  const std::vector<std::string> bad{
      good.substr(0, good.size() / 2),
      "[]",
      R"({"schema_version": 2, "n": 2, "k": 1, "edges": [[1, 2, 1]]})",
      R"({"schema_version": 1, "k": 1, "edges": []})",
      R"({"schema_version": 1, "n": 2, "k": 1, "edges": [[1, 2]]})",
      R"({"schema_version": 1, "n": 2, "k": 1, "edges": [["1", 2, 1]]})",
      R"({"schema_version": 1, "n": 2, "k": 1, "edges": [], "labels": {"x": "a"}})",
  };
  for (const auto& text : bad) {
    EXPECT_EQ(code_of([&] { parse_document(text); }), ErrorCode::MalformedDocument) << text;
  }
  // Parses, but the graph itself is invalid.
  const auto loop = parse_document(R"({"schema_version": 1, "n": 2, "k": 1, "edges": [[1, 1, 1]]})");
  EXPECT_EQ(code_of([&] { to_graph(loop); }), ErrorCode::SelfLoop);
}

TEST(Document, ReadWriteFiles) {
  const auto path = fs::temp_directory_path() / "kaleido-doc-test.json";
  const auto doc = make_document(construct_complete(7, 3).graph);
  write_text_atomic(path, serialize(doc));
  EXPECT_EQ(read_document(path), doc);
  fs::remove(path);
  EXPECT_EQ(code_of([&] { read_document(path); }), ErrorCode::Io);
}

TEST(Export, Csv) {
  const auto g = construct_complete(6, 3).graph;
  const auto csv = export_csv(g);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "vertex,a_1,a_2,a_3");
  const auto tuples = multiset_colors(g);
  for (int v = 1; v <= 6; ++v) {
    ASSERT_TRUE(std::getline(in, line));
    std::string expected = std::to_string(v);
    for (int c : tuples[v - 1].counts) expected += "," + std::to_string(c);
    EXPECT_EQ(line, expected);
  }
  EXPECT_FALSE(std::getline(in, line));
}

TEST(Export, Dot) {
  const auto g = construct_complete(6, 3).graph;
  const auto dot = export_dot(g, {{1, "v_1"}});
  EXPECT_EQ(dot.rfind("graph kaleidoscope {", 0), 0u);
  EXPECT_NE(dot.find("1 [label=\"v_1\"];"), std::string::npos);
  for (const auto& e : g.edges()) {
    const auto line = std::to_string(e.u) + " -- " + std::to_string(e.v) +
                      " [color=" + std::to_string(e.color) + "];";
    EXPECT_NE(dot.find(line), std::string::npos) << line;
  }
  EXPECT_EQ(dot.back(), '\n');
  EXPECT_NE(dot.find("}\n"), std::string::npos);
}

}  // namespace
}  // namespace kaleido
