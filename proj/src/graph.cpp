#include "ctag/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <random>

#include "ctag/io.hpp"
#include "ctag/random.hpp"

namespace ctag {

namespace {

// Published coupling maps, undirected. Mirrored in data/ibm20.arch and
// data/ibm27.arch; a unit test keeps the two in sync.
constexpr int kIbm20Edges[][2] = {
    {0, 1},   {1, 2},   {2, 3},   {3, 4},   {0, 5},   {4, 9},
    {5, 6},   {6, 7},   {7, 8},   {8, 9},   {5, 10},  {7, 12},
    {9, 14},  {10, 11}, {11, 12}, {12, 13}, {13, 14}, {10, 15},
    {14, 19}, {15, 16}, {16, 17}, {17, 18}, {18, 19},
};

constexpr int kIbm27Edges[][2] = {
    {0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
    {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
    {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
    {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26},
};

template <std::size_t N>
std::vector<Edge> to_edges(const int (&raw)[N][2]) {
  std::vector<Edge> out;
  out.reserve(N);
  for (const auto& e : raw) out.emplace_back(e[0], e[1]);
  return out;
}

int parse_positive(std::string_view text, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "bad architecture spec '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

void ProblemGraph::build(int n, std::vector<Edge> edges) {
  if (n < 0) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "vertex count must be non-negative");
  }
  n_ = n;
  edge_id_.assign(static_cast<std::size_t>(n) * n, -1);
  for (const auto& e : edges) {
    if (e.u == e.v) {
      throw ValidationError(ErrorKind::SelfLoop,
                            "self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= n) {
      throw ValidationError(ErrorKind::OutOfRange,
                            "edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ") out of range for n=" +
                                std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw ValidationError(ErrorKind::DuplicateEdge,
                          "duplicate edge (" + std::to_string(dup->u) + "," +
                              std::to_string(dup->v) + ")");
  }
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (int i = 0; i < num_edges(); ++i) {
    const auto& e = edges_[i];
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    edge_id_[static_cast<std::size_t>(e.u) * n + e.v] = i;
    edge_id_[static_cast<std::size_t>(e.v) * n + e.u] = i;
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

ProblemGraph::ProblemGraph(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [a, b] : edges) normalized.emplace_back(a, b);
  build(n, std::move(normalized));
}

ProblemGraph::ProblemGraph(int n, std::span<const Edge> edges) {
  build(n, {edges.begin(), edges.end()});
}

bool ProblemGraph::has_edge(int a, int b) const {
  return edge_index(a, b) >= 0;
}

int ProblemGraph::edge_index(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
  return edge_id_[static_cast<std::size_t>(a) * n_ + b];
}

int ProblemGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

ProblemGraph make_problem_graph(int n,
                                std::span<const std::pair<int, int>> edges) {
  return ProblemGraph(n, edges);
}

ProblemGraph clique(int n) {
  if (n < 1) {
    throw ValidationError(ErrorKind::InvalidArgument, "clique needs n >= 1");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return ProblemGraph(n, edges);
}

int random_graph_edge_count(int n, double density) {
  const double total = static_cast<double>(n) * (n - 1) / 2.0;
  // Half-up rounding; the epsilon absorbs binary error in decimal densities
  // such as 0.3 * 1225 = 367.49999....
  return static_cast<int>(std::floor(density * total + 0.5 + 1e-9));
}

ProblemGraph random_graph(int n, double density, std::uint32_t seed) {
  if (n < 2) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "random_graph needs n >= 2");
  }
  if (!(density > 0.0) || density > 1.0) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "density must be in (0, 1]");
  }
  const int total = n * (n - 1) / 2;
  const int m = random_graph_edge_count(n, density);
  if (m == 0) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "degenerate instance: zero edges");
  }
  std::vector<int> index(total);
  for (int i = 0; i < total; ++i) index[i] = i;
  std::mt19937 rng(seed);
  for (int i = 0; i < m; ++i) {
    const auto j =
        i + static_cast<int>(bounded_draw(rng, static_cast<std::uint32_t>(
                                                   total - i)));
    std::swap(index[i], index[j]);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) edges.push_back(pair_from_index(n, index[i]));
  return ProblemGraph(n, edges);
}

double density(const ProblemGraph& g) {
  const int n = g.num_vertices();
  if (n < 2) return 0.0;
  return static_cast<double>(g.num_edges()) / (n * (n - 1) / 2.0);
}

Architecture::Architecture(std::string name, int num_qubits,
                           std::span<const Edge> couplings)
    : name_(std::move(name)), q_(num_qubits) {
  if (q_ < 1) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "architecture needs at least one qubit");
  }
  // Reuse the graph validation rules for the coupling list.
  ProblemGraph as_graph(q_, couplings);
  couplings_ = as_graph.edges();
  adjacency_.assign(q_, {});
  for (int v = 0; v < q_; ++v) {
    auto nb = as_graph.neighbors(v);
    adjacency_[v].assign(nb.begin(), nb.end());
  }
  dist_.assign(static_cast<std::size_t>(q_) * q_, -1);
  std::deque<int> frontier;
  for (int src = 0; src < q_; ++src) {
    int* row = &dist_[static_cast<std::size_t>(src) * q_];
    row[src] = 0;
    frontier.assign(1, src);
    while (!frontier.empty()) {
      const int cur = frontier.front();
      frontier.pop_front();
      for (int nb : adjacency_[cur]) {
        if (row[nb] < 0) {
          row[nb] = row[cur] + 1;
          frontier.push_back(nb);
        }
      }
    }
    if (src == 0 && std::find(row, row + q_, -1) != row + q_) {
      throw ValidationError(ErrorKind::Disconnected,
                            "architecture '" + name_ + "' is disconnected");
    }
  }
}

bool Architecture::coupled(int a, int b) const {
  if (!valid_qubit(a) || !valid_qubit(b) || a == b) return false;
  return distance(a, b) == 1;
}

Architecture linear_architecture(int n) {
  if (n < 1) {
    throw ValidationError(ErrorKind::InvalidArgument, "linear needs n >= 1");
  }
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Architecture("linear:" + std::to_string(n), n, edges);
}

Architecture grid_architecture(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "grid dimensions must be positive");
  }
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int id = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(id, id + 1);
      if (r + 1 < rows) edges.emplace_back(id, id + cols);
    }
  }
  return Architecture("grid:" + std::to_string(rows) + "x" +
                          std::to_string(cols),
                      rows * cols, edges);
}

Architecture ibm20_architecture() {
  return Architecture("ibm20", 20, to_edges(kIbm20Edges));
}

Architecture ibm27_architecture() {
  return Architecture("ibm27", 27, to_edges(kIbm27Edges));
}

Architecture smallest_square_grid(int n) {
  int side = 1;
  while (side * side < n) ++side;
  return grid_architecture(side, side);
}

Architecture make_architecture(std::string_view spec) {
  if (spec == "ibm20") return ibm20_architecture();
  if (spec == "ibm27") return ibm27_architecture();
  if (spec.starts_with("linear:")) {
    return linear_architecture(parse_positive(spec.substr(7), spec));
  }
  if (spec.starts_with("grid:")) {
    auto dims = spec.substr(5);
    auto x = dims.find('x');
    if (x == std::string_view::npos) {
      throw ValidationError(ErrorKind::InvalidArgument,
                            "bad architecture spec '" + std::string(spec) +
                                "'");
    }
    return grid_architecture(parse_positive(dims.substr(0, x), spec),
                             parse_positive(dims.substr(x + 1), spec));
  }
  if (spec.starts_with("file:")) {
    return read_architecture_file(std::string(spec.substr(5)));
  }
  throw ValidationError(ErrorKind::InvalidArgument,
                        "unknown architecture spec '" + std::string(spec) +
                            "'");
}

int shortest_dist(const Architecture& arch, int a, int b) {
  return arch.distance(a, b);
}

Mapping Mapping::identity(int n) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  return Mapping(std::move(pi));
}

bool Mapping::is_valid(int num_physical) const {
  std::vector<char> used(num_physical > 0 ? num_physical : 0, 0);
  for (int p : pi_) {
    if (p < 0 || p >= num_physical || used[p]) return false;
    used[p] = 1;
  }
  return true;
}

std::vector<int> Mapping::inverse(int num_physical) const {
  std::vector<int> inv(num_physical, -1);
  for (int l = 0; l < size(); ++l) inv[pi_[l]] = l;
  return inv;
}

}  // namespace ctag
