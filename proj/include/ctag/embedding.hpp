#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ctag/graph.hpp"

namespace ctag {

/// Ordered chain of distinct, consecutively coupled physical qubits.
struct LineEmbedding {
  std::vector<int> order;

  [[nodiscard]] int size() const noexcept {
    return static_cast<int>(order.size());
  }
  /// True when entries are distinct and consecutive entries are coupled.
  [[nodiscard]] bool is_valid(const Architecture& arch) const;
  /// Same path up to reversal.
  [[nodiscard]] bool same_path(const LineEmbedding& other) const;

  friend bool operator==(const LineEmbedding&, const LineEmbedding&) = default;
};

/**
 * Generalized Hilbert (gilbert) traversal of a rows x cols lattice with
 * row-major ids. Rectangles are split recursively, so any size works. If a
 * particular shape would need a diagonal step, the transposed traversal is
 * tried and a boustrophedon scan is the last resort.
 */
LineEmbedding hilbert_embedding(int rows, int cols);

enum class SearchStatus {
  Found,
  NoPath,           // search space exhausted
  BudgetExhausted,  // unknown
};

struct EmbeddingSearchOptions {
  /// Path length to look for; 0 means every qubit (Hamiltonian path).
  int length = 0;
  std::uint64_t max_expansions = 1'000'000;
};

struct EmbeddingSearchResult {
  SearchStatus status = SearchStatus::NoPath;
  std::optional<LineEmbedding> embedding;
  std::uint64_t expansions = 0;
};

/**
 * Backtracking DFS for a simple path, extending to neighbours with the
 * fewest unvisited neighbours first (Warnsdorff). The seed permutes start
 * vertices and breaks degree ties.
 */
EmbeddingSearchResult find_line_embedding(
    const Architecture& arch, std::uint64_t seed,
    const EmbeddingSearchOptions& options = {});

/**
 * Up to k distinct embeddings (reversal counts as the same path) from
 * re-seeded searches; gives up after 16k attempts.
 */
std::vector<LineEmbedding> multi_embeddings(
    const Architecture& arch, int k, std::uint64_t seed,
    const EmbeddingSearchOptions& options = {});

/// Cached line for ibm20 (Hamiltonian) and ibm27 (longest simple path, 21).
std::optional<LineEmbedding> cached_embedding(const Architecture& arch);

/**
 * Preferred line of `length` qubits: identity on linear, the Hilbert curve on
 * grids, the cached path on IBM devices, otherwise a DFS search. Returns
 * nullopt when none is found.
 */
std::optional<LineEmbedding> default_embedding(const Architecture& arch,
                                               int length);

}  // namespace ctag
