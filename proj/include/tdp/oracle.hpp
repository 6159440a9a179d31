#pragma once

// Brute-force ground truth for the tree polynomial.
//
// A primary subtree is identified by its cut: the set of host vertices that
// are its leaves. Cuts are produced by the stop-or-descend rule: at each
// vertex the cut either stops there or descends into every child.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tdp/parallel.hpp"
#include "tdp/polyring.hpp"
#include "tdp/trees.hpp"

namespace tdp {

struct primary_subtree {
  rooted_tree host;
  std::vector<std::size_t> cut;  // preorder indices, ascending
};

namespace detail {

struct host_layout {
  std::vector<vertex_ref> order;
  std::vector<std::vector<std::size_t>> children;
};

inline host_layout layout_of(const rooted_tree& t) {
  host_layout h{preorder(t), {}};
  h.children.resize(h.order.size());
  for (std::size_t v = 1; v < h.order.size(); ++v)
    h.children[static_cast<std::size_t>(h.order[v].parent)].push_back(v);
  return h;
}

inline std::vector<std::vector<std::size_t>> cuts_below(const host_layout& h, std::size_t v) {
  std::vector<std::vector<std::size_t>> out{{v}};
  if (h.children[v].empty()) return out;
  std::vector<std::vector<std::size_t>> combined{{}};
  for (auto c : h.children[v]) {
    auto sub = cuts_below(h, c);
    std::vector<std::vector<std::size_t>> next;
    next.reserve(combined.size() * sub.size());
    for (const auto& left : combined)
      for (const auto& right : sub) {
        auto merged = left;
        merged.insert(merged.end(), right.begin(), right.end());
        next.push_back(std::move(merged));
      }
    combined = std::move(next);
  }
  for (auto& cut : combined) {
    std::sort(cut.begin(), cut.end());
    out.push_back(std::move(cut));
  }
  return out;
}

}  // namespace detail

inline std::vector<primary_subtree> primary_subtrees(const rooted_tree& t) {
  const auto h = detail::layout_of(t);
  std::vector<primary_subtree> out;
  for (auto& cut : detail::cuts_below(h, 0)) out.push_back({t, std::move(cut)});
  return out;
}

// Checks the cut against the definition directly: nonempty, an antichain,
// and every host leaf has exactly one cut vertex among its ancestors-or-self.
inline bool is_valid(const primary_subtree& s) {
  const auto order = preorder(s.host);
  if (s.cut.empty()) return false;
  std::vector<bool> in_cut(order.size(), false);
  for (auto v : s.cut) {
    if (v >= order.size() || in_cut[v]) return false;
    in_cut[v] = true;
  }
  auto cut_ancestors = [&](std::size_t v, bool include_self) {
    std::size_t count = 0;
    for (auto cur = static_cast<std::ptrdiff_t>(v); cur >= 0;
         cur = order[static_cast<std::size_t>(cur)].parent) {
      if (!include_self && static_cast<std::size_t>(cur) == v) continue;
      count += in_cut[static_cast<std::size_t>(cur)];
    }
    return count;
  };
  for (auto v : s.cut)
    if (cut_ancestors(v, false) != 0) return false;
  for (std::size_t v = 0; v < order.size(); ++v)
    if (order[v].subtree.is_trivial() && cut_ancestors(v, true) != 1) return false;
  return true;
}

// x^alpha y^beta: alpha cut vertices are host leaves, beta are host internals.
inline monomial q_monomial(const primary_subtree& s) {
  const auto order = preorder(s.host);
  monomial m = monomial::one(2);
  for (auto v : s.cut) ++m.exponents[order[v].subtree.is_trivial() ? 0 : 1];
  return m;
}

inline polynomial generating_function(const rooted_tree& t) {
  std::vector<std::pair<monomial, integer>> terms;
  for (const auto& s : primary_subtrees(t)) terms.emplace_back(q_monomial(s), 1);
  return polynomial::from_terms(var_set::xy(), std::move(terms));
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::string invariant_key(const polynomial& p) { return to_text(p); }
inline std::string invariant_key(std::string_view s) { return std::string(s); }

}  // namespace detail

struct collision_group {
  std::string invariant;           // canonical text of the shared polynomial
  std::vector<std::string> trees;  // canonical codes, sorted
};

inline std::string to_json_line(const collision_group& g) {
  nlohmann::ordered_json j;
  j["invariant"] = g.invariant;
  j["trees"] = g.trees;
  return j.dump();
}

// Groups trees by invariant value (a polynomial, or any string key) and
// returns every group with two or more members. The result is sorted and
// does not depend on the worker count.
template <class Tree, class Invariant>
std::vector<collision_group> collision_search(std::span<const Tree> trees, Invariant&& inv,
                                              std::size_t workers = worker_count()) {
  std::vector<std::string> keys(trees.size());
  parallel_for(trees.size(), [&](std::size_t i) { keys[i] = detail::invariant_key(inv(trees[i])); }, workers);
  std::map<std::string, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < trees.size(); ++i)
    groups[keys[i]].push_back(std::string(canonical_code(trees[i])));
  std::vector<collision_group> out;
  for (auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    out.push_back({key, std::move(members)});
  }
  return out;
}

template <class Tree, class Invariant>
std::vector<collision_group> collision_search(const std::vector<Tree>& trees, Invariant&& inv,
                                              std::size_t workers = worker_count()) {
  return collision_search(std::span<const Tree>(trees), std::forward<Invariant>(inv), workers);
}

}  // namespace tdp
