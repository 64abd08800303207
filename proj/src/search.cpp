// search.cpp -- bidirectional BFS over the single-step rewrite graph
#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "stylus/derivation.hpp"

namespace stylus {

namespace {

bool shortlex_less(Word const& u, Word const& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u.letters < v.letters;
}

struct NodeInfo {
  Word parent;
  DerivationStep step;  // applied to parent yields this node
  std::uint32_t depth = 0;
};

using Visited = std::unordered_map<Word, NodeInfo, WordHash>;

// Enumerates single-step successors in (relation, fwd-then-rev, position)
// order, the tie-break used everywhere in this library.
template <typename Fn>
void for_each_neighbor(Presentation const& p, Word const& w, Fn&& fn) {
  for (std::size_t rel = 0; rel < p.relations.size(); ++rel) {
    for (StepDirection dir : {StepDirection::Forward, StepDirection::Reverse}) {
      Word const& from = dir == StepDirection::Forward ? p.relations[rel].lhs
                                                       : p.relations[rel].rhs;
      if (from.size() > w.size()) continue;
      for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
        if (!occurs_at(w, from, pos)) continue;
        DerivationStep step{rel, dir, pos};
        StepApplication app = apply_step(p, w, step);
        fn(std::move(*app.word), step);
      }
    }
  }
}

// Steps along the recorded parent chain from the root to `w`.
std::vector<DerivationStep> path_from_root(Visited const& visited, Word const& w) {
  std::vector<DerivationStep> steps;
  Word cur = w;
  for (;;) {
    auto it = visited.find(cur);
    if (it->second.depth == 0) break;
    steps.push_back(it->second.step);
    cur = it->second.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

std::optional<Derivation> search_equality(Presentation const& p, Word const& u,
                                          Word const& v, SearchBudget budget) {
  for (Word const* w : {&u, &v})
    for (Symbol s : w->letters)
      if (s >= p.alphabet.size())
        throw std::invalid_argument("search_equality: word outside the alphabet");

  Derivation result;
  result.presentation = p;
  result.start = u;
  result.end = v;
  if (u == v) return result;  // zero steps

  Visited visited[2];
  std::vector<Word> frontier[2];
  std::uint32_t depth[2] = {0, 0};
  visited[0].emplace(u, NodeInfo{});
  visited[1].emplace(v, NodeInfo{});
  frontier[0].push_back(u);
  frontier[1].push_back(v);

  std::uint64_t expanded = 0;
  while (depth[0] + depth[1] < budget.max_depth) {
    // Expand the shallower side, the u-side on ties; skip an exhausted side.
    int side;
    if (frontier[0].empty() && frontier[1].empty()) return std::nullopt;
    if (frontier[0].empty())
      side = 1;
    else if (frontier[1].empty())
      side = 0;
    else
      side = depth[0] <= depth[1] ? 0 : 1;
    int const other = 1 - side;

    std::vector<Word> next;
    std::optional<Word> meet;
    for (Word const& node : frontier[side]) {
      if (expanded == budget.max_nodes) return std::nullopt;
      ++expanded;
      for_each_neighbor(p, node, [&](Word&& nb, DerivationStep const& step) {
        if (visited[side].contains(nb)) return;
        visited[side].emplace(nb, NodeInfo{node, step, depth[side] + 1});
        if (visited[other].contains(nb) && (!meet || shortlex_less(nb, *meet)))
          meet = nb;
        next.push_back(std::move(nb));
      });
    }
    frontier[side] = std::move(next);
    ++depth[side];

    if (meet) {
      // u ==> meet, then the inverse of v ==> meet.
      result.steps = path_from_root(visited[0], *meet);
      std::vector<DerivationStep> back = path_from_root(visited[1], *meet);
      for (auto it = back.rbegin(); it != back.rend(); ++it) {
        DerivationStep s = *it;
        s.direction = s.direction == StepDirection::Forward ? StepDirection::Reverse
                                                            : StepDirection::Forward;
        result.steps.push_back(s);
      }
      return result;
    }
  }
  return std::nullopt;
}

}  // namespace stylus
