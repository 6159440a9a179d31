#pragma once

// Unlabeled rooted and unrooted trees, leaf-labeled rooted trees, and their
// text forms. Every tree value is immutable and canonical: children are kept
// sorted by canonical code, so structural equality is isomorphism.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdp/errors.hpp"

namespace tdp {

class rooted_tree {
 public:
  // The trivial tree.
  rooted_tree() : node_(trivial_node()) {}

  explicit rooted_tree(std::vector<rooted_tree> children) {
    if (children.empty()) {
      node_ = trivial_node();
      return;
    }
    std::sort(children.begin(), children.end(),
              [](const rooted_tree& a, const rooted_tree& b) { return a.code() < b.code(); });
    auto n = std::make_shared<node>();
    n->code = "(";
    n->vertices = 1;
    for (const auto& c : children) {
      n->code += c.code();
      n->vertices += c.vertex_count();
      n->leaves += c.leaf_count();
    }
    n->code += ')';
    n->children = std::move(children);
    node_ = std::move(n);
  }

  const std::vector<rooted_tree>& children() const noexcept { return node_->children; }
  bool is_trivial() const noexcept { return node_->children.empty(); }
  std::size_t root_degree() const noexcept { return node_->children.size(); }
  std::size_t vertex_count() const noexcept { return node_->vertices; }
  std::size_t leaf_count() const noexcept { return node_->leaves; }
  std::size_t internal_count() const noexcept { return node_->vertices - node_->leaves; }

  // Canonical Dyck word.
  const std::string& code() const noexcept { return node_->code; }

  friend bool operator==(const rooted_tree& a, const rooted_tree& b) {
    return a.node_ == b.node_ || a.code() == b.code();
  }
  friend std::strong_ordering operator<=>(const rooted_tree& a, const rooted_tree& b) {
    return a.code() <=> b.code();
  }

 private:
  struct node {
    std::vector<rooted_tree> children;
    std::string code = "()";
    std::size_t vertices = 1;
    std::size_t leaves = 0;
  };

  static const std::shared_ptr<const node>& trivial_node() {
    static const std::shared_ptr<const node> leaf = [] {
      auto n = std::make_shared<node>();
      n->leaves = 1;
      return std::shared_ptr<const node>(std::move(n));
    }();
    return leaf;
  }

  std::shared_ptr<const node> node_;
};

inline const std::string& canonical_code(const rooted_tree& t) { return t.code(); }
inline const std::string& to_dyck(const rooted_tree& t) { return t.code(); }

// Joins the given trees under a new common root.
inline rooted_tree wedge(std::vector<rooted_tree> parts) {
  if (parts.empty()) throw std::invalid_argument("wedge needs at least one tree");
  return rooted_tree(std::move(parts));
}

inline rooted_tree rooted_star(std::size_t k) {
  return k == 0 ? rooted_tree() : wedge(std::vector<rooted_tree>(k));
}

// Rooted path of length l, i.e. l+1 vertices with the root at one end.
inline rooted_tree rooted_path(std::size_t l) {
  rooted_tree t;
  for (std::size_t i = 0; i < l; ++i) t = wedge({t});
  return t;
}

inline bool is_rooted_path(const rooted_tree& t) { return t.leaf_count() == 1; }

// Vertices are identified by their preorder index in the canonical Dyck word.
struct vertex_ref {
  rooted_tree subtree;
  std::ptrdiff_t parent;  // -1 for the root
  std::size_t depth;
};

inline std::vector<vertex_ref> preorder(const rooted_tree& t) {
  std::vector<vertex_ref> out;
  out.reserve(t.vertex_count());
  std::vector<std::pair<const rooted_tree*, std::ptrdiff_t>> stack{{&t, -1}};
  while (!stack.empty()) {
    auto [cur, parent] = stack.back();
    stack.pop_back();
    const std::size_t depth = parent < 0 ? 0 : out[static_cast<std::size_t>(parent)].depth + 1;
    const auto self = static_cast<std::ptrdiff_t>(out.size());
    out.push_back({*cur, parent, depth});
    const auto& ch = cur->children();
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(&*it, self);
  }
  return out;
}

inline rooted_tree affix_tree(const rooted_tree& t, std::size_t vertex) {
  if (vertex >= t.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(vertex) + " is not in the tree");
  return preorder(t)[vertex].subtree;
}

// Nearest vertex to the root with at least two children; the root itself when
// it has two or more children; the far leaf for a rooted path.
inline std::size_t branching_vertex(const rooted_tree& t) {
  if (t.is_trivial()) throw std::invalid_argument("the trivial tree has no branching vertex");
  std::size_t index = 0;
  const rooted_tree* cur = &t;
  while (cur->root_degree() == 1) {
    cur = &cur->children().front();
    ++index;  // the only child directly follows its parent in preorder
  }
  return index;
}

inline std::size_t stem_length(const rooted_tree& t) {
  return t.is_trivial() ? 0 : branching_vertex(t);
}

inline rooted_tree branching_affix_tree(const rooted_tree& t) {
  const rooted_tree* cur = &t;
  while (cur->root_degree() == 1) cur = &cur->children().front();
  return *cur;
}

// ---------------------------------------------------------------------------
// Dyck words: the outermost pair is the root.

inline rooted_tree parse_dyck(std::string_view word) {
  if (word.empty()) throw parse_error("empty Dyck word", 0);
  std::vector<std::vector<rooted_tree>> open;
  std::optional<rooted_tree> root;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (root) throw parse_error("text after the root vertex", i);
    if (c == '(') {
      open.emplace_back();
    } else if (c == ')') {
      if (open.empty()) throw parse_error("unbalanced ')'", i);
      rooted_tree t(std::move(open.back()));
      open.pop_back();
      if (open.empty())
        root = std::move(t);
      else
        open.back().push_back(std::move(t));
    } else {
      throw parse_error(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (!root) throw parse_error("unbalanced: missing ')'", word.size());
  return *root;
}

// ---------------------------------------------------------------------------
// Leaf-labeled rooted trees. Leaves carry label indices 1..t; the root may
// carry an extra label (used for the images of leaf-edge contractions).

class labeled_rooted_tree {
 public:
  static labeled_rooted_tree leaf(std::size_t label) {
    if (label == 0) throw std::invalid_argument("leaf labels start at 1");
    auto n = std::make_shared<node>();
    n->label = label;
    n->code = "(" + std::to_string(label) + ")";
    n->leaves = 1;
    n->max_label = label;
    return labeled_rooted_tree(std::move(n));
  }

  // Root labels of the given children are dropped.
  explicit labeled_rooted_tree(std::vector<labeled_rooted_tree> children) {
    if (children.empty()) throw std::invalid_argument("internal vertex needs children");
    for (auto& c : children) c.root_label_.reset();
    std::sort(children.begin(), children.end(),
              [](const auto& a, const auto& b) { return a.body_code() < b.body_code(); });
    auto n = std::make_shared<node>();
    n->code = "(";
    for (const auto& c : children) {
      n->code += c.body_code();
      n->leaves += c.leaf_count();
      n->max_label = std::max(n->max_label, c.max_label());
    }
    n->code += ')';
    n->children = std::move(children);
    node_ = std::move(n);
  }

  labeled_rooted_tree with_root_label(std::size_t label) const {
    if (label == 0) throw std::invalid_argument("labels start at 1");
    labeled_rooted_tree r = *this;
    r.root_label_ = label;
    return r;
  }

  bool is_leaf() const noexcept { return node_->children.empty(); }
  std::size_t label() const noexcept { return node_->label; }  // leaves only
  const std::vector<labeled_rooted_tree>& children() const noexcept { return node_->children; }
  const std::optional<std::size_t>& root_label() const noexcept { return root_label_; }
  std::size_t leaf_count() const noexcept { return node_->leaves; }
  std::size_t max_label() const noexcept {
    return std::max(node_->max_label, root_label_.value_or(0));
  }

  std::string code() const {
    return root_label_ ? std::to_string(*root_label_) + ":" + node_->code : node_->code;
  }

  rooted_tree shape() const {
    if (is_leaf()) return rooted_tree();
    std::vector<rooted_tree> ch;
    ch.reserve(node_->children.size());
    for (const auto& c : node_->children) ch.push_back(c.shape());
    return rooted_tree(std::move(ch));
  }

  friend bool operator==(const labeled_rooted_tree& a, const labeled_rooted_tree& b) {
    return a.root_label_ == b.root_label_ && a.body_code() == b.body_code();
  }

 private:
  struct node {
    std::vector<labeled_rooted_tree> children;
    std::size_t label = 0;
    std::string code;
    std::size_t leaves = 0;
    std::size_t max_label = 0;
  };

  explicit labeled_rooted_tree(std::shared_ptr<const node> n) : node_(std::move(n)) {}
  const std::string& body_code() const noexcept { return node_->code; }

  std::shared_ptr<const node> node_;
  std::optional<std::size_t> root_label_;
};

inline std::string canonical_code(const labeled_rooted_tree& t) { return t.code(); }

// ---------------------------------------------------------------------------
// Adjacency-list helpers shared by the unrooted tree types.

using adjacency_list = std::vector<std::vector<std::size_t>>;

namespace detail {

inline adjacency_list adjacency_from_edges(std::size_t n,
                                           std::span<const std::pair<std::size_t, std::size_t>> edges) {
  if (n < 2) throw std::invalid_argument("unrooted trees need at least 2 vertices");
  if (edges.size() + 1 != n) throw std::invalid_argument("a tree on n vertices has n-1 edges");
  adjacency_list adj(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n || a == b) throw std::invalid_argument("invalid edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw std::invalid_argument("edges do not form a connected tree");
  return adj;
}

inline rooted_tree rooted_at(const adjacency_list& adj, std::size_t root, std::ptrdiff_t parent) {
  std::vector<rooted_tree> ch;
  for (auto w : adj[root])
    if (static_cast<std::ptrdiff_t>(w) != parent)
      ch.push_back(rooted_at(adj, w, static_cast<std::ptrdiff_t>(root)));
  return rooted_tree(std::move(ch));
}

// One or two centers, found by repeatedly stripping leaves.
inline std::vector<std::size_t> centers(const adjacency_list& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (auto v : layer)
      for (auto w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

inline adjacency_list adjacency_of(const rooted_tree& t) {
  const auto order = preorder(t);
  adjacency_list adj(order.size());
  for (std::size_t v = 1; v < order.size(); ++v) {
    const auto p = static_cast<std::size_t>(order[v].parent);
    adj[p].push_back(v);
    adj[v].push_back(p);
  }
  return adj;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Unlabeled unrooted trees, stored as the canonical rooting at the center
// (for bicentral trees, the central-edge endpoint with the smaller code).

class unrooted_tree {
 public:
  static unrooted_tree from_edges(std::size_t n,
                                  std::span<const std::pair<std::size_t, std::size_t>> edges) {
    return unrooted_tree(detail::adjacency_from_edges(n, edges));
  }

  // Forgets the root of a rooted tree.
  static unrooted_tree from_rooted(const rooted_tree& t) {
    if (t.is_trivial()) throw std::invalid_argument("unrooted trees need at least 2 vertices");
    return unrooted_tree(detail::adjacency_of(t));
  }

  const rooted_tree& representative() const noexcept { return rep_; }
  const std::string& code() const noexcept { return rep_.code(); }
  std::size_t vertex_count() const noexcept { return rep_.vertex_count(); }
  // Vertices of the representative, numbered in preorder.
  const adjacency_list& adjacency() const noexcept { return adj_; }

  std::size_t leaf_count() const {
    std::size_t n = 0;
    for (const auto& nb : adj_) n += nb.size() == 1;
    return n;
  }

  friend bool operator==(const unrooted_tree& a, const unrooted_tree& b) { return a.rep_ == b.rep_; }

 private:
  explicit unrooted_tree(const adjacency_list& adj) {
    const auto c = detail::centers(adj);
    rep_ = detail::rooted_at(adj, c[0], -1);
    if (c.size() == 2) {
      rooted_tree other = detail::rooted_at(adj, c[1], -1);
      if (other.code() < rep_.code()) rep_ = std::move(other);
    }
    adj_ = detail::adjacency_of(rep_);
  }

  rooted_tree rep_;
  adjacency_list adj_;
};

inline const std::string& canonical_code(const unrooted_tree& t) { return t.code(); }
inline const std::string& to_dyck(const unrooted_tree& t) { return t.code(); }

inline bool is_isomorphic(const rooted_tree& a, const rooted_tree& b) { return a == b; }
inline bool is_isomorphic(const unrooted_tree& a, const unrooted_tree& b) { return a == b; }
// A rooted tree is never isomorphic to an unrooted one.
inline bool is_isomorphic(const rooted_tree&, const unrooted_tree&) { return false; }
inline bool is_isomorphic(const unrooted_tree&, const rooted_tree&) { return false; }

// One rooted tree per leaf edge: the edge is contracted and the merged vertex
// becomes the root. Sorted by canonical code.
inline std::vector<rooted_tree> contract_leaf_edges(const unrooted_tree& t) {
  const auto& adj = t.adjacency();
  std::vector<rooted_tree> out;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (adj[u].size() != 1) continue;
    out.push_back(detail::rooted_at(adj, adj[u][0], static_cast<std::ptrdiff_t>(u)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Adds an edge and a leaf at the root, then forgets the root: the inverse of
// one leaf-edge contraction.
inline unrooted_tree reattach_root_leaf(const rooted_tree& t) {
  auto adj = detail::adjacency_of(t);
  const std::size_t leaf = adj.size();
  adj.emplace_back(std::vector<std::size_t>{0});
  adj[0].push_back(leaf);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (auto w : adj[v])
      if (v < w) edges.emplace_back(v, w);
  return unrooted_tree::from_edges(adj.size(), edges);
}

// ---------------------------------------------------------------------------
// Leaf-labeled unrooted trees. label[v] is 0 for internal vertices.

class labeled_unrooted_tree {
 public:
  labeled_unrooted_tree(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges,
                        std::vector<std::size_t> labels)
      : adj_(detail::adjacency_from_edges(n, edges)), labels_(std::move(labels)) {
    if (labels_.size() != n) throw std::invalid_argument("one label slot per vertex");
    for (std::size_t v = 0; v < n; ++v)
      if (adj_[v].size() == 1 && labels_[v] == 0)
        throw std::invalid_argument("leaf " + std::to_string(v) + " is unlabeled");
  }

  // Forgets the root. A root with a single child becomes a leaf and must
  // then carry a root label.
  static labeled_unrooted_tree from_rooted(const labeled_rooted_tree& t) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> labels{t.root_label().value_or(0)};
    flatten(t, 0, edges, labels);
    return labeled_unrooted_tree(labels.size(), edges, std::move(labels));
  }

  const adjacency_list& adjacency() const noexcept { return adj_; }
  const std::vector<std::size_t>& labels() const noexcept { return labels_; }
  std::size_t vertex_count() const noexcept { return adj_.size(); }

  std::size_t max_label() const {
    std::size_t m = 0;
    for (auto l : labels_) m = std::max(m, l);
    return m;
  }

  // Each image is rooted at the merged vertex, whose root label is the label
  // of the contracted leaf.
  std::vector<labeled_rooted_tree> contract_leaf_edges() const {
    std::vector<labeled_rooted_tree> out;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (adj_[u].size() != 1) continue;
      out.push_back(rooted_at(adj_[u][0], static_cast<std::ptrdiff_t>(u)).with_root_label(labels_[u]));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.code() < b.code(); });
    return out;
  }

 private:
  static void flatten(const labeled_rooted_tree& t, std::size_t self,
                      std::vector<std::pair<std::size_t, std::size_t>>& edges,
                      std::vector<std::size_t>& labels) {
    for (const auto& c : t.children()) {
      const std::size_t id = labels.size();
      labels.push_back(c.is_leaf() ? c.label() : 0);
      edges.emplace_back(self, id);
      flatten(c, id, edges, labels);
    }
  }

  labeled_rooted_tree rooted_at(std::size_t root, std::ptrdiff_t parent) const {
    std::vector<labeled_rooted_tree> ch;
    for (auto w : adj_[root])
      if (static_cast<std::ptrdiff_t>(w) != parent)
        ch.push_back(rooted_at(w, static_cast<std::ptrdiff_t>(root)));
    if (ch.empty()) return labeled_rooted_tree::leaf(labels_[root]);
    return labeled_rooted_tree(std::move(ch));
  }

  adjacency_list adj_;
  std::vector<std::size_t> labels_;
};

}  // namespace tdp
