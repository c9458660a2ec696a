#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctag {

/// Undirected vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  OutOfRange,
  Disconnected,
  InvalidArgument,
  Parse,
};

/// Raised when an input violates a data-model invariant.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/**
 * The MAX-CUT input graph. One vertex per logical qubit and one edge per
 * CPHASE gate. Vertex ids are 0..n-1; edges are kept sorted.
 */
class ProblemGraph {
 public:
  ProblemGraph() = default;
  ProblemGraph(int n, std::span<const std::pair<int, int>> edges);
  ProblemGraph(int n, std::span<const Edge> edges);

  [[nodiscard]] int num_vertices() const noexcept { return n_; }
  [[nodiscard]] int num_edges() const noexcept {
    return static_cast<int>(edges_.size());
  }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept {
    return edges_;
  }
  [[nodiscard]] bool has_edge(int a, int b) const;
  /// Index of edge (a,b) in edges(), or -1.
  [[nodiscard]] int edge_index(int a, int b) const;
  [[nodiscard]] int degree(int v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] std::span<const int> neighbors(int v) const {
    return adjacency_[v];
  }

 private:
  void build(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> edge_id_;  // n*n, -1 where absent
};

/// Validating constructor; reports self-loops, duplicates and bad ids.
ProblemGraph make_problem_graph(int n,
                                std::span<const std::pair<int, int>> edges);
ProblemGraph clique(int n);

/**
 * Uniform random graph with exactly round(density * n(n-1)/2) edges
 * (round half up). Edges are drawn without replacement by a partial
 * Fisher-Yates shuffle over the lexicographic pair index, using
 * std::mt19937 seeded with `seed` and rejection-sampled bounded draws, so
 * the result is identical on every conforming platform.
 */
ProblemGraph random_graph(int n, double density, std::uint32_t seed);

/// Edge count divided by the clique edge count.
double density(const ProblemGraph& g);

/// Number of edges random_graph will draw.
int random_graph_edge_count(int n, double density);

/**
 * Hardware coupling graph. Connected, undirected, no self-loops or
 * duplicates. All-pairs hop distances are computed once at construction.
 */
class Architecture {
 public:
  Architecture() = default;
  Architecture(std::string name, int num_qubits,
               std::span<const Edge> couplings);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] int num_qubits() const noexcept { return q_; }
  [[nodiscard]] const std::vector<Edge>& couplings() const noexcept {
    return couplings_;
  }
  [[nodiscard]] std::span<const int> neighbors(int q) const {
    return adjacency_[q];
  }
  [[nodiscard]] bool coupled(int a, int b) const;
  [[nodiscard]] int distance(int a, int b) const {
    return dist_[static_cast<std::size_t>(a) * q_ + b];
  }
  [[nodiscard]] bool valid_qubit(int q) const noexcept {
    return q >= 0 && q < q_;
  }

 private:
  std::string name_;
  int q_ = 0;
  std::vector<Edge> couplings_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> dist_;
};

Architecture linear_architecture(int n);
/// r x c square lattice, qubit (row, col) has id row * c + col.
Architecture grid_architecture(int rows, int cols);
/// IBM Q Poughkeepsie, 20 qubits.
Architecture ibm20_architecture();
/// IBM Q Cairo (27-qubit Falcon heavy-hex).
Architecture ibm27_architecture();

/**
 * Builds an architecture from a spec string:
 * "linear:N" | "grid:RxC" | "ibm20" | "ibm27" | "file:PATH".
 */
Architecture make_architecture(std::string_view spec);

/// Smallest square lattice with at least n qubits.
Architecture smallest_square_grid(int n);

int shortest_dist(const Architecture& arch, int a, int b);

/// Logical-to-physical assignment; pi[logical] = physical.
class Mapping {
 public:
  Mapping() = default;
  explicit Mapping(std::vector<int> pi) : pi_(std::move(pi)) {}

  static Mapping identity(int n);

  [[nodiscard]] int size() const noexcept {
    return static_cast<int>(pi_.size());
  }
  [[nodiscard]] int operator[](int logical) const { return pi_[logical]; }
  [[nodiscard]] const std::vector<int>& values() const noexcept { return pi_; }

  /// True when injective with every target in [0, num_physical).
  [[nodiscard]] bool is_valid(int num_physical) const;
  /// Inverse table of length num_physical, -1 for unused physical qubits.
  [[nodiscard]] std::vector<int> inverse(int num_physical) const;

  friend bool operator==(const Mapping&, const Mapping&) = default;

 private:
  std::vector<int> pi_;
};

}  // namespace ctag
