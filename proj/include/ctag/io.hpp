#pragma once

#include <iosfwd>
#include <string>

#include "ctag/circuit.hpp"
#include "ctag/embedding.hpp"
#include "ctag/graph.hpp"

namespace ctag {

/// Malformed input file; line() is 1-based, 0 when not tied to a line.
class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what)
      : ValidationError(ErrorKind::Parse,
                        line > 0 ? "line " + std::to_string(line) + ": " + what
                                 : what),
        line_(line) {}

  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

// Problem graph: "n m" header then m lines "u v"; '#' starts a comment.
ProblemGraph read_problem_graph(std::istream& in);
ProblemGraph read_problem_graph_file(const std::string& path);
void write_problem_graph(std::ostream& out, const ProblemGraph& g);

// Architecture: same shape; a leading "# name" line sets the name.
Architecture read_architecture(std::istream& in,
                               const std::string& fallback_name = "custom");
Architecture read_architecture_file(const std::string& path);
void write_architecture(std::ostream& out, const Architecture& arch);

/// "logical physical" per line. Every logical id 0..k-1 must appear once.
Mapping read_mapping(std::istream& in);
void write_mapping(std::ostream& out, const Mapping& m);

/// Single line of space-separated physical ids.
LineEmbedding read_embedding(std::istream& in);
void write_embedding(std::ostream& out, const LineEmbedding& e);

/// One line per cycle: "t: CPHASE(a,b) SWAP(c,d)".
std::string schedule_to_text(const ScheduledCircuit& c);

std::string schedule_to_json(const ScheduledCircuit& c);
/// Throws ParseError on malformed documents.
ScheduledCircuit schedule_from_json(const std::string& text);

}  // namespace ctag
