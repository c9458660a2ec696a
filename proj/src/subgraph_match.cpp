#include "ctag/subgraph_match.hpp"

#include <algorithm>

namespace ctag {

namespace {

class Matcher {
 public:
  Matcher(const ProblemGraph& p, const ProblemGraph& t,
          std::optional<std::chrono::steady_clock::time_point> deadline)
      : p_(p),
        t_(t),
        deadline_(deadline),
        image_(p.num_vertices(), -1),
        used_(t.num_vertices(), 0) {
    build_order();
  }

  MatchResult run() {
    MatchResult result;
    if (p_.num_vertices() > t_.num_vertices() ||
        p_.num_edges() > t_.num_edges()) {
      return result;
    }
    const bool ok = extend(0);
    result.states = states_;
    if (ok) {
      result.status = MatchStatus::Found;
      result.assignment = image_;
    } else if (timed_out_) {
      result.status = MatchStatus::Timeout;
    }
    return result;
  }

 private:
  // Greedy order: next vertex maximizes links to ordered vertices, then
  // degree, then lowest id.
  void build_order() {
    const int n = p_.num_vertices();
    std::vector<int> links(n, 0);
    std::vector<char> placed(n, 0);
    anchor_.assign(n, -1);
    for (int k = 0; k < n; ++k) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] ||
            (links[v] == links[best] && p_.degree(v) > p_.degree(best))) {
          best = v;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int nb : p_.neighbors(best)) {
        if (!placed[nb]) {
          ++links[nb];
          if (anchor_[nb] < 0) anchor_[nb] = best;
        }
      }
    }
  }

  bool feasible(int u, int x) const {
    if (used_[x] || t_.degree(x) < p_.degree(u)) return false;
    for (int nb : p_.neighbors(u)) {
      const int img = image_[nb];
      if (img >= 0 && !t_.has_edge(img, x)) return false;
    }
    return true;
  }

  bool try_candidate(std::size_t depth, int u, int x) {
    if (!feasible(u, x)) return false;
    image_[u] = x;
    used_[x] = 1;
    if (extend(depth + 1)) return true;
    image_[u] = -1;
    used_[x] = 0;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if ((++states_ & 1023) == 0 && deadline_ &&
        std::chrono::steady_clock::now() > *deadline_) {
      timed_out_ = true;
    }
    if (timed_out_) return false;
    const int u = order_[depth];
    if (anchor_[u] >= 0) {
      for (int x : t_.neighbors(image_[anchor_[u]])) {
        if (try_candidate(depth, u, x)) return true;
        if (timed_out_) return false;
      }
      return false;
    }
    for (int x = 0; x < t_.num_vertices(); ++x) {
      if (try_candidate(depth, u, x)) return true;
      if (timed_out_) return false;
    }
    return false;
  }

  const ProblemGraph& p_;
  const ProblemGraph& t_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<int> order_;
  std::vector<int> anchor_;  // earlier-ordered neighbour, -1 for roots
  std::vector<int> image_;
  std::vector<char> used_;
  std::uint64_t states_ = 0;
  bool timed_out_ = false;
};

}  // namespace

MatchResult find_subgraph_monomorphism(
    const ProblemGraph& pattern, const ProblemGraph& target,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  return Matcher(pattern, target, deadline).run();
}

}  // namespace ctag
