#pragma once

// Newick reader/writer for tree shapes. Branch lengths, comments and internal
// node names are accepted and discarded. In unlabeled mode leaf names are
// discarded too; in labeled mode every leaf must be named and names become
// label indices 1..t in order of first appearance.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdp/errors.hpp"
#include "tdp/trees.hpp"

namespace tdp {

struct newick_node {
  std::vector<newick_node> children;
  std::string name;
};

namespace detail {

class newick_reader {
 public:
  explicit newick_reader(std::string_view s) : s_(s) {}

  newick_node read() {
    newick_node root = subtree();
    skip_ws();
    if (pos_ == s_.size() || s_[pos_] != ';') fail("expected ';'");
    ++pos_;
    skip_ws();
    if (pos_ != s_.size()) fail("text after ';'");
    return root;
  }

 private:
  newick_node subtree() {
    newick_node n;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      for (;;) {
        n.children.push_back(subtree());
        skip_ws();
        if (pos_ == s_.size()) fail("unbalanced: missing ')'");
        if (s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    n.name = label();
    branch_length();
    return n;
  }

  std::string label() {
    skip_ws();
    std::string out;
    if (pos_ < s_.size() && s_[pos_] == '\'') {
      ++pos_;
      for (;;) {
        if (pos_ == s_.size()) fail("unterminated quoted label");
        if (s_[pos_] == '\'') {
          if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '\'') {
            out += '\'';
            pos_ += 2;
            continue;
          }
          ++pos_;
          return out;
        }
        out += s_[pos_++];
      }
    }
    while (pos_ < s_.size() && !is_delimiter(s_[pos_])) out += s_[pos_++];
    return out;
  }

  void branch_length() {
    skip_ws();
    if (pos_ == s_.size() || s_[pos_] != ':') return;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
            s_[pos_] == 'e' || s_[pos_] == 'E' || s_[pos_] == '-' || s_[pos_] == '+'))
      ++pos_;
    if (pos_ == start) fail("expected branch length");
  }

  void skip_ws() {
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '[') {
        const auto close = s_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated comment");
        pos_ = close + 1;
        continue;
      }
      return;
    }
  }

  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '[' || c == '\'' ||
           std::isspace(static_cast<unsigned char>(c));
  }

  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline rooted_tree shape_of(const newick_node& n) {
  std::vector<rooted_tree> ch;
  ch.reserve(n.children.size());
  for (const auto& c : n.children) ch.push_back(shape_of(c));
  return rooted_tree(std::move(ch));
}

inline labeled_rooted_tree labeled_of(const newick_node& n, std::vector<std::string>& names) {
  if (n.children.empty()) {
    if (n.name.empty()) throw std::invalid_argument("labeled Newick: unnamed leaf");
    std::size_t idx = 0;
    while (idx < names.size() && names[idx] != n.name) ++idx;
    if (idx == names.size()) names.push_back(n.name);
    return labeled_rooted_tree::leaf(idx + 1);
  }
  std::vector<labeled_rooted_tree> ch;
  for (const auto& c : n.children) ch.push_back(labeled_of(c, names));
  return labeled_rooted_tree(std::move(ch));
}

inline void write_shape(const rooted_tree& t, std::string& out) {
  if (t.is_trivial()) return;
  out += '(';
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += ',';
    first = false;
    write_shape(c, out);
  }
  out += ')';
}

inline bool is_newick_special(char c) {
  return c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '[' || c == ']' ||
         c == '\'' || std::isspace(static_cast<unsigned char>(c));
}

inline std::string quote_name(const std::string& name) {
  bool plain = !name.empty();
  for (char c : name)
    if (is_newick_special(c)) plain = false;
  if (plain) return name;
  std::string q = "'";
  for (char c : name) q += c == '\'' ? std::string("''") : std::string(1, c);
  return q + "'";
}

}  // namespace detail

inline newick_node parse_newick_raw(std::string_view s) { return detail::newick_reader(s).read(); }

inline rooted_tree parse_newick(std::string_view s) { return detail::shape_of(parse_newick_raw(s)); }

struct labeled_newick {
  labeled_rooted_tree tree;
  std::vector<std::string> names;  // names[i] is label i+1
};

inline labeled_newick parse_labeled_newick(std::string_view s) {
  std::vector<std::string> names;
  auto tree = detail::labeled_of(parse_newick_raw(s), names);
  return {std::move(tree), std::move(names)};
}

inline std::string to_newick(const rooted_tree& t) {
  std::string out;
  detail::write_shape(t, out);
  return out + ';';
}

namespace detail {

inline void write_labeled(const labeled_rooted_tree& t, const std::vector<std::string>& names,
                          std::string& out) {
  if (t.is_leaf()) {
    out += t.label() <= names.size() ? quote_name(names[t.label() - 1]) : std::to_string(t.label());
    return;
  }
  out += '(';
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += ',';
    first = false;
    write_labeled(c, names, out);
  }
  out += ')';
}

}  // namespace detail

// Leaves whose label has no entry in `names` are written as the label number.
inline std::string to_newick(const labeled_rooted_tree& t, const std::vector<std::string>& names = {}) {
  std::string out;
  detail::write_labeled(t, names, out);
  return out + ';';
}

}  // namespace tdp
