#include <gtest/gtest.h>

#include <sstream>

#include "ctag/io.hpp"
#include "ctag/pattern.hpp"
#include "ctag/scheduler.hpp"

using namespace ctag;

namespace {

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_problem_graph(in);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    return e.line();
  }
  ADD_FAILURE() << "accepted: " << text;
  return -1;
}

}  // namespace

TEST(GraphIo, RoundTrip) {
  const auto g = random_graph(20, 0.3, 4);
  std::stringstream buf;
  write_problem_graph(buf, g);
  const auto back = read_problem_graph(buf);
  EXPECT_EQ(back.num_vertices(), 20);
  EXPECT_EQ(back.edges(), g.edges());
}

TEST(GraphIo, CommentsAndBlankLines) {
  std::istringstream in("# triangle\n3 3\n\n0 1  # first\n1 2\n2 0\n");
  const auto g = read_problem_graph(in);
  EXPECT_EQ(g.num_edges(), 3);
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("3 2\n0 1\n0 0\n"), 3);       // self-loop
  EXPECT_EQ(parse_error_line("3 2\n0 1\n1 0\n"), 3);       // duplicate
  EXPECT_EQ(parse_error_line("3 1\n0 5\n"), 2);            // out of range
  EXPECT_EQ(parse_error_line("3 1\n0 x\n"), 2);            // bad token
  EXPECT_EQ(parse_error_line("3 1\n0 1 2\n"), 2);          // extra field
  EXPECT_EQ(parse_error_line("3\n"), 1);                   // short header
  EXPECT_GE(parse_error_line("3 2\n0 1\n"), 0);            // count mismatch
}

TEST(GraphIo, MessageMentionsLine) {
  std::istringstream in("4 1\n2 2\n");
  try {
    read_problem_graph(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 2: ", 0), 0u) << e.what();
  }
}

TEST(ArchitectureIo, NameAndRoundTrip) {
  std::istringstream in("# ring4\n4 4\n0 1\n1 2\n2 3\n3 0\n");
  const auto arch = read_architecture(in);
  EXPECT_EQ(arch.name(), "ring4");
  EXPECT_EQ(arch.couplings().size(), 4u);
  std::stringstream buf;
  write_architecture(buf, arch);
  const auto back = read_architecture(buf);
  EXPECT_EQ(back.name(), "ring4");
  EXPECT_EQ(back.couplings(), arch.couplings());

  std::istringstream unnamed("2 1\n0 1\n");
  EXPECT_EQ(read_architecture(unnamed, "mine").name(), "mine");
}

TEST(ArchitectureIo, DisconnectedRejected) {
  std::istringstream in("4 2\n0 1\n2 3\n");
  EXPECT_THROW(read_architecture(in), ValidationError);
}

TEST(MappingIo, RoundTripAndErrors) {
  const Mapping m({4, 0, 2});
  std::stringstream buf;
  write_mapping(buf, m);
  EXPECT_EQ(read_mapping(buf), m);
  std::istringstream gap("0 1\n2 3\n");
  EXPECT_THROW(read_mapping(gap), ParseError);
  std::istringstream twice("0 1\n0 2\n");
  EXPECT_THROW(read_mapping(twice), ParseError);
}

TEST(EmbeddingIo, RoundTrip) {
  const LineEmbedding e{{3, 1, 4, 0, 2}};
  std::stringstream buf;
  write_embedding(buf, e);
  EXPECT_EQ(read_embedding(buf), e);
}

TEST(ScheduleIo, TextFormat) {
  ScheduledCircuit c;
  c.init = Mapping::identity(3);
  c.cycles = {{Gate::cphase(0, 1), Gate::swap(2, 3)}, {Gate::cphase(1, 2)}};
  EXPECT_EQ(schedule_to_text(c), "0: CPHASE(0,1) SWAP(2,3)\n1: CPHASE(1,2)\n");
}

TEST(ScheduleIo, JsonRoundTrip) {
  for (const auto& arch : {grid_architecture(4, 4), ibm20_architecture()}) {
    const auto g = random_graph(14, 0.4, 2);
    const auto c = schedule(g, arch);
    const auto back = schedule_from_json(schedule_to_json(c));
    EXPECT_EQ(back, c);
  }
  const auto pattern = generate_clique_pattern(5);
  EXPECT_EQ(schedule_from_json(schedule_to_json(pattern)), pattern);
}

TEST(ScheduleIo, MalformedJson) {
  EXPECT_THROW(schedule_from_json("{"), ParseError);
  EXPECT_THROW(schedule_from_json("[]"), ParseError);
  EXPECT_THROW(schedule_from_json(R"({"init": [0, 1], "cycles": [[{"gate": "CNOT", "a": 0, "b": 1}]]})"),
               ParseError);
}
