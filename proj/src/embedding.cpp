#include "ctag/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <random>
#include <string_view>

#include "ctag/random.hpp"

namespace ctag {

namespace {

constexpr int kIbm20Line[] = {0,  1,  2,  3,  4,  9,  8,  7,  6,  5,
                              10, 11, 12, 13, 14, 19, 18, 17, 16, 15};
constexpr int kIbm27Line[] = {0,  1,  2,  3,  5,  8,  11, 14, 16, 19, 22,
                              25, 24, 23, 21, 18, 15, 12, 10, 7,  4};

int sgn(int x) { return (x > 0) - (x < 0); }

int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Gilbert's generalized Hilbert recursion; (ax, ay) is the major axis and
// (bx, by) the minor one.
void gilbert(int x, int y, int ax, int ay, int bx, int by,
             std::vector<std::pair<int, int>>& out) {
  const int w = std::abs(ax + ay);
  const int h = std::abs(bx + by);
  const int dax = sgn(ax), day = sgn(ay);
  const int dbx = sgn(bx), dby = sgn(by);
  if (h == 1) {
    for (int i = 0; i < w; ++i, x += dax, y += day) out.emplace_back(x, y);
    return;
  }
  if (w == 1) {
    for (int i = 0; i < h; ++i, x += dbx, y += dby) out.emplace_back(x, y);
    return;
  }
  int ax2 = floor_half(ax), ay2 = floor_half(ay);
  int bx2 = floor_half(bx), by2 = floor_half(by);
  const int w2 = std::abs(ax2 + ay2);
  const int h2 = std::abs(bx2 + by2);
  if (2 * w > 3 * h) {
    if ((w2 % 2) != 0 && w > 2) {
      ax2 += dax;
      ay2 += day;
    }
    gilbert(x, y, ax2, ay2, bx, by, out);
    gilbert(x + ax2, y + ay2, ax - ax2, ay - ay2, bx, by, out);
  } else {
    if ((h2 % 2) != 0 && h > 2) {
      bx2 += dbx;
      by2 += dby;
    }
    gilbert(x, y, bx2, by2, ax2, ay2, out);
    gilbert(x + bx2, y + by2, ax, ay, bx - bx2, by - by2, out);
    gilbert(x + (ax - dax) + (bx2 - dbx), y + (ay - day) + (by2 - dby), -bx2,
            -by2, -(ax - ax2), -(ay - ay2), out);
  }
}

// Coordinates are (column, row).
std::vector<std::pair<int, int>> gilbert_points(int cols, int rows,
                                                bool transpose) {
  std::vector<std::pair<int, int>> pts;
  pts.reserve(static_cast<std::size_t>(rows) * cols);
  const bool wide = transpose ? cols < rows : cols >= rows;
  if (wide) {
    gilbert(0, 0, cols, 0, 0, rows, pts);
  } else {
    gilbert(0, 0, 0, rows, cols, 0, pts);
  }
  return pts;
}

bool unit_steps(const std::vector<std::pair<int, int>>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const int dx = std::abs(pts[i].first - pts[i - 1].first);
    const int dy = std::abs(pts[i].second - pts[i - 1].second);
    if (dx + dy != 1) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> grid_dims(const std::string& name) {
  std::string_view s(name);
  if (!s.starts_with("grid:")) return std::nullopt;
  s.remove_prefix(5);
  const auto x = s.find('x');
  if (x == std::string_view::npos) return std::nullopt;
  int r = 0, c = 0;
  auto rs = s.substr(0, x), cs = s.substr(x + 1);
  if (std::from_chars(rs.data(), rs.data() + rs.size(), r).ec != std::errc() ||
      std::from_chars(cs.data(), cs.data() + cs.size(), c).ec != std::errc()) {
    return std::nullopt;
  }
  return std::make_pair(r, c);
}

class PathSearch {
 public:
  PathSearch(const Architecture& arch, std::uint64_t seed,
             const EmbeddingSearchOptions& options)
      : arch_(arch),
        q_(arch.num_qubits()),
        target_(options.length > 0 ? std::min(options.length, q_) : q_),
        budget_(options.max_expansions),
        visited_(q_, 0),
        free_degree_(q_, 0),
        rank_(q_) {
    for (int v = 0; v < q_; ++v) {
      rank_[v] = v;
      free_degree_[v] = static_cast<int>(arch.neighbors(v).size());
    }
    std::mt19937 rng(static_cast<std::uint32_t>(seed ^ (seed >> 32)));
    if (seed != 0) portable_shuffle(std::span<int>(rank_), rng);
  }

  EmbeddingSearchResult run() {
    EmbeddingSearchResult result;
    if (target_ == q_) {
      int leaves = 0;
      for (int v = 0; v < q_; ++v) leaves += free_degree_[v] <= 1;
      if (q_ > 1 && leaves > 2) return result;  // degree argument
    }
    std::vector<int> starts(q_);
    for (int v = 0; v < q_; ++v) starts[v] = v;
    std::sort(starts.begin(), starts.end(), [&](int a, int b) {
      if (free_degree_[a] != free_degree_[b]) {
        return free_degree_[a] < free_degree_[b];
      }
      return rank_[a] < rank_[b];
    });
    for (int s : starts) {
      if (dfs_from(s)) {
        result.status = SearchStatus::Found;
        result.embedding = LineEmbedding{path_};
        break;
      }
      if (exhausted_) {
        result.status = SearchStatus::BudgetExhausted;
        break;
      }
    }
    result.expansions = expansions_;
    return result;
  }

 private:
  void visit(int v) {
    visited_[v] = 1;
    path_.push_back(v);
    for (int nb : arch_.neighbors(v)) --free_degree_[nb];
  }

  void unvisit(int v) {
    visited_[v] = 0;
    path_.pop_back();
    for (int nb : arch_.neighbors(v)) ++free_degree_[nb];
  }

  // A stranded vertex (no free neighbours, not next to the path end) can
  // never be reached; only relevant when every qubit must be covered.
  bool stranded(int end) const {
    if (target_ != q_) return false;
    for (int v = 0; v < q_; ++v) {
      if (!visited_[v] && free_degree_[v] == 0 && !arch_.coupled(v, end)) {
        return true;
      }
    }
    return false;
  }

  bool dfs_from(int start) {
    visit(start);
    const bool found = extend();
    if (!found) unvisit(start);
    return found;
  }

  bool extend() {
    if (static_cast<int>(path_.size()) == target_) return true;
    if (++expansions_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const int end = path_.back();
    if (stranded(end)) return false;
    std::vector<int> next;
    for (int nb : arch_.neighbors(end)) {
      if (!visited_[nb]) next.push_back(nb);
    }
    std::sort(next.begin(), next.end(), [&](int a, int b) {
      if (free_degree_[a] != free_degree_[b]) {
        return free_degree_[a] < free_degree_[b];
      }
      return rank_[a] < rank_[b];
    });
    for (int nb : next) {
      visit(nb);
      if (extend()) return true;
      unvisit(nb);
      if (exhausted_) return false;
    }
    return false;
  }

  const Architecture& arch_;
  int q_;
  int target_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
  std::vector<char> visited_;
  std::vector<int> free_degree_;
  std::vector<int> rank_;
  std::vector<int> path_;
};

}  // namespace

bool LineEmbedding::is_valid(const Architecture& arch) const {
  std::vector<char> seen(arch.num_qubits(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int q = order[i];
    if (!arch.valid_qubit(q) || seen[q]) return false;
    seen[q] = 1;
    if (i > 0 && !arch.coupled(order[i - 1], q)) return false;
  }
  return true;
}

bool LineEmbedding::same_path(const LineEmbedding& other) const {
  if (order == other.order) return true;
  return std::equal(order.begin(), order.end(), other.order.rbegin(),
                    other.order.rend());
}

LineEmbedding hilbert_embedding(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "grid dimensions must be positive");
  }
  auto pts = gilbert_points(cols, rows, false);
  if (!unit_steps(pts)) pts = gilbert_points(cols, rows, true);
  LineEmbedding line;
  line.order.reserve(static_cast<std::size_t>(rows) * cols);
  if (unit_steps(pts)) {
    for (auto [x, y] : pts) line.order.push_back(y * cols + x);
    return line;
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      line.order.push_back(r * cols + (r % 2 == 0 ? c : cols - 1 - c));
    }
  }
  return line;
}

EmbeddingSearchResult find_line_embedding(
    const Architecture& arch, std::uint64_t seed,
    const EmbeddingSearchOptions& options) {
  return PathSearch(arch, seed, options).run();
}

std::vector<LineEmbedding> multi_embeddings(
    const Architecture& arch, int k, std::uint64_t seed,
    const EmbeddingSearchOptions& options) {
  if (k < 1) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "multi_embeddings needs k >= 1");
  }
  std::vector<LineEmbedding> found;
  const int attempts = 16 * k;
  for (int i = 0; i < attempts && static_cast<int>(found.size()) < k; ++i) {
    // Attempt 0 uses the caller's seed verbatim; later ones are re-seeded.
    const std::uint64_t s =
        i == 0 ? seed : seed * 0x9E3779B97F4A7C15ULL + static_cast<unsigned>(i);
    auto res = find_line_embedding(arch, s, options);
    if (res.status != SearchStatus::Found) {
      if (res.status == SearchStatus::NoPath) break;
      continue;
    }
    const auto& line = *res.embedding;
    const bool dup = std::any_of(found.begin(), found.end(), [&](const auto& e) {
      return e.same_path(line);
    });
    if (!dup) found.push_back(line);
  }
  return found;
}

std::optional<LineEmbedding> cached_embedding(const Architecture& arch) {
  if (arch.name() == "ibm20") {
    return LineEmbedding{{std::begin(kIbm20Line), std::end(kIbm20Line)}};
  }
  if (arch.name() == "ibm27") {
    return LineEmbedding{{std::begin(kIbm27Line), std::end(kIbm27Line)}};
  }
  return std::nullopt;
}

std::optional<LineEmbedding> default_embedding(const Architecture& arch,
                                               int length) {
  if (length > arch.num_qubits() || length < 0) return std::nullopt;
  auto prefix = [&](LineEmbedding line) -> std::optional<LineEmbedding> {
    if (line.size() < length || !line.is_valid(arch)) return std::nullopt;
    line.order.resize(length);
    return line;
  };
  std::optional<LineEmbedding> candidate;
  if (arch.name().starts_with("linear:")) {
    LineEmbedding line;
    for (int i = 0; i < arch.num_qubits(); ++i) line.order.push_back(i);
    candidate = prefix(std::move(line));
  } else if (auto dims = grid_dims(arch.name());
             dims && dims->first * dims->second == arch.num_qubits()) {
    candidate = prefix(hilbert_embedding(dims->first, dims->second));
  } else if (auto cached = cached_embedding(arch)) {
    candidate = prefix(*cached);
  }
  if (candidate) return candidate;
  EmbeddingSearchOptions options;
  options.length = length;
  auto res = find_line_embedding(arch, 0, options);
  if (res.status == SearchStatus::Found) return res.embedding;
  return std::nullopt;
}

}  // namespace ctag
