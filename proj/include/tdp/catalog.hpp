#pragma once

// Isomorph-free exhaustive generation of trees.
//
// Rooted trees come from the canonical level-sequence successor rule
// (Beyer-Hedetniemi), free trees by keeping the rooted trees that equal the
// center rooting of their underlying free tree, and m-ary trees by composing
// multisets of smaller m-ary trees over leaf counts.

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tdp/trees.hpp"

namespace tdp {

namespace detail {

// Level sequence (root at level 0) in preorder -> tree.
inline rooted_tree tree_from_levels(const std::vector<std::size_t>& levels) {
  std::vector<std::vector<rooted_tree>> open;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    while (open.size() > levels[i]) {
      rooted_tree t(std::move(open.back()));
      open.pop_back();
      open.back().push_back(std::move(t));
    }
    open.emplace_back();
  }
  while (open.size() > 1) {
    rooted_tree t(std::move(open.back()));
    open.pop_back();
    open.back().push_back(std::move(t));
  }
  return rooted_tree(std::move(open.back()));
}

}  // namespace detail

// Calls fn(tree) once per isomorphism class of rooted trees on n vertices.
template <class Fn>
void for_each_rooted(std::size_t n, Fn&& fn) {
  if (n == 0) throw std::invalid_argument("tree size must be at least 1");
  // Start from the path 0,1,...,n-1; stop after the star 0,1,1,...,1.
  std::vector<std::size_t> levels(n);
  for (std::size_t i = 0; i < n; ++i) levels[i] = i;
  for (;;) {
    fn(detail::tree_from_levels(levels));
    std::size_t p = n;
    for (std::size_t i = n; i-- > 0;)
      if (levels[i] > 1) {
        p = i;
        break;
      }
    if (p == n) return;
    std::size_t q = p;
    while (levels[--q] != levels[p] - 1) {
    }
    for (std::size_t i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
  }
}

inline std::vector<rooted_tree> enumerate_rooted(std::size_t n) {
  std::vector<rooted_tree> out;
  for_each_rooted(n, [&](rooted_tree t) { out.push_back(std::move(t)); });
  return out;
}

inline std::vector<unrooted_tree> enumerate_unrooted(std::size_t n) {
  if (n < 2) throw std::invalid_argument("unrooted trees need at least 2 vertices");
  std::vector<unrooted_tree> out;
  for_each_rooted(n, [&](const rooted_tree& t) {
    auto u = unrooted_tree::from_rooted(t);
    if (u.representative() == t) out.push_back(std::move(u));
  });
  return out;
}

// Rooted trees whose internal vertices all have exactly m children, by leaf
// count. Results are memoized per (m, leaves).
inline const std::vector<rooted_tree>& enumerate_mary(std::size_t m, std::size_t leaves) {
  if (m == 0) throw std::invalid_argument("arity must be at least 1");
  if (leaves == 0) throw std::invalid_argument("tree size must be at least 1");
  if (m == 1 && leaves != 1) throw std::invalid_argument("unary trees have exactly one leaf");
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<rooted_tree>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({m, leaves}); it != memo.end()) return it->second;
  }
  std::vector<rooted_tree> out;
  if (m == 1) {
    // Unbounded family; only the trivial tree is returned as the base case.
    out.emplace_back();
  } else if (leaves == 1) {
    out.emplace_back();
  } else if ((leaves - 1) % (m - 1) == 0) {
    // Pool of all smaller m-ary trees, tagged by leaf count.
    std::vector<std::pair<std::size_t, rooted_tree>> pool;
    for (std::size_t l = 1; l < leaves; ++l)
      for (const auto& t : enumerate_mary(m, l)) pool.emplace_back(l, t);
    std::vector<rooted_tree> chosen;
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t left) {
      if (chosen.size() == m) {
        if (left == 0) out.push_back(wedge(chosen));
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        if (pool[i].first > left) continue;
        chosen.push_back(pool[i].second);
        pick(i, left - pool[i].first);
        chosen.pop_back();
      }
    };
    pick(0, leaves);
  }
  std::lock_guard lock(mutex);
  return memo.emplace(std::pair{m, leaves}, std::move(out)).first->second;
}

inline std::vector<rooted_tree> enumerate_root_degree_gt1(std::size_t n) {
  std::vector<rooted_tree> out;
  for_each_rooted(n, [&](rooted_tree t) {
    if (t.root_degree() > 1) out.push_back(std::move(t));
  });
  return out;
}

// Free trees on n vertices whose non-leaf vertices all have degree m+1.
inline std::vector<unrooted_tree> enumerate_unrooted_mary(std::size_t m, std::size_t n) {
  std::vector<unrooted_tree> out;
  for (auto& u : enumerate_unrooted(n)) {
    bool ok = true;
    for (const auto& nb : u.adjacency())
      if (nb.size() != 1 && nb.size() != m + 1) ok = false;
    if (ok) out.push_back(std::move(u));
  }
  return out;
}

enum class tree_class { rooted, unrooted, rooted_mary, root_degree_gt1, unrooted_mary };

inline bool is_unrooted_class(tree_class c) {
  return c == tree_class::unrooted || c == tree_class::unrooted_mary;
}

// `size` counts vertices, except for rooted_mary where it counts leaves.
struct tree_catalog {
  tree_class kind = tree_class::rooted;
  std::size_t size = 1;
  std::size_t arity = 2;
};

inline std::vector<rooted_tree> rooted_catalog(const tree_catalog& cat) {
  switch (cat.kind) {
    case tree_class::rooted: return enumerate_rooted(cat.size);
    case tree_class::rooted_mary: return enumerate_mary(cat.arity, cat.size);
    case tree_class::root_degree_gt1: return enumerate_root_degree_gt1(cat.size);
    default: throw std::invalid_argument("catalog class is not rooted");
  }
}

inline std::vector<unrooted_tree> unrooted_catalog(const tree_catalog& cat) {
  switch (cat.kind) {
    case tree_class::unrooted: return enumerate_unrooted(cat.size);
    case tree_class::unrooted_mary: return enumerate_unrooted_mary(cat.arity, cat.size);
    default: throw std::invalid_argument("catalog class is not unrooted");
  }
}

// Canonical Dyck words of the catalog, in generation order.
inline std::vector<std::string> catalog_dyck_words(const tree_catalog& cat) {
  std::vector<std::string> out;
  if (is_unrooted_class(cat.kind)) {
    for (const auto& u : unrooted_catalog(cat)) out.push_back(u.code());
  } else {
    for (const auto& t : rooted_catalog(cat)) out.push_back(t.code());
  }
  return out;
}

}  // namespace tdp
