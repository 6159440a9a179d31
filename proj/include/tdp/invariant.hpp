#pragma once

// The tree polynomial and its variants:
//   rooted     P(leaf) = x,  P(T) = y + prod P(child)
//   unrooted   product of P over the leaf-edge contractions
//   prime      P with an integer substituted for y
//   labeled    leaf i contributes x_i instead of x

#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tdp/errors.hpp"
#include "tdp/polyring.hpp"
#include "tdp/trees.hpp"

namespace tdp {

// Memo of rooted tree polynomials keyed by canonical code. Concurrent
// readers; inserts keep the first value (duplicates are identical anyway).
class polynomial_cache {
 public:
  std::optional<polynomial> find(const std::string& code) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(code);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& code, const polynomial& p) {
    std::unique_lock lock(mutex_);
    map_.try_emplace(code, p);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, polynomial> map_;
};

inline polynomial_cache& rooted_polynomial_cache() {
  static polynomial_cache cache;
  return cache;
}

inline polynomial p_rooted(const rooted_tree& t) {
  static const polynomial x = polynomial::variable(var_set::xy(), "x");
  static const polynomial y = polynomial::variable(var_set::xy(), "y");
  if (t.is_trivial()) return x;
  auto& cache = rooted_polynomial_cache();
  if (auto hit = cache.find(t.code())) return *hit;
  polynomial prod = polynomial::constant(var_set::xy(), 1);
  for (const auto& c : t.children()) prod = prod * p_rooted(c);
  polynomial result = y + prod;
  cache.insert(t.code(), result);
  return result;
}

// Single pass over the word: a leaf pair contributes x, an internal pair
// contributes (product of its children) + y. No tree value is built.
inline polynomial p_from_dyck(std::string_view word) {
  static const polynomial x = polynomial::variable(var_set::xy(), "x");
  static const polynomial y = polynomial::variable(var_set::xy(), "y");
  static const polynomial one = polynomial::constant(var_set::xy(), 1);
  if (word.empty()) throw parse_error("empty Dyck word", 0);
  struct frame {
    polynomial product;
    bool has_child = false;
  };
  std::vector<frame> open;
  std::optional<polynomial> result;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (result) throw parse_error("text after the root vertex", i);
    if (word[i] == '(') {
      open.push_back({one, false});
    } else if (word[i] == ')') {
      if (open.empty()) throw parse_error("unbalanced ')'", i);
      frame f = std::move(open.back());
      open.pop_back();
      polynomial value = f.has_child ? f.product + y : x;
      if (open.empty()) {
        result = std::move(value);
      } else {
        open.back().product = open.back().product * value;
        open.back().has_child = true;
      }
    } else {
      throw parse_error(std::string("unexpected character '") + word[i] + "'", i);
    }
  }
  if (!result) throw parse_error("unbalanced: missing ')'", word.size());
  return *result;
}

inline polynomial p_unrooted(const unrooted_tree& t) {
  polynomial prod = polynomial::constant(var_set::xy(), 1);
  for (const auto& r : contract_leaf_edges(t)) prod = prod * p_rooted(r);
  return prod;
}

// Any integer is accepted; completeness needs a prime.
inline polynomial p_prime(const rooted_tree& t, const integer& p) {
  return substitute(p_rooted(t), "y", p);
}

inline polynomial p_prime(const unrooted_tree& t, const integer& p) {
  return substitute(p_unrooted(t), "y", p);
}

namespace detail {

inline polynomial p_labeled_body(const labeled_rooted_tree& t, const var_set& vars) {
  if (t.is_leaf()) return polynomial::variable(vars, vars.name(t.label() - 1));
  polynomial prod = polynomial::constant(vars, 1);
  for (const auto& c : t.children()) prod = prod * p_labeled_body(c, vars);
  return polynomial::variable(vars, "y") + prod;
}

}  // namespace detail

// Polynomial over x_1..x_t, y. A root label does not enter the recursion.
inline polynomial p_labeled(const labeled_rooted_tree& t, std::size_t alphabet) {
  if (t.max_label() > alphabet)
    throw std::out_of_range("label " + std::to_string(t.max_label()) + " exceeds alphabet size " +
                            std::to_string(alphabet));
  return detail::p_labeled_body(t, var_set::labeled(alphabet));
}

inline polynomial p_labeled(const labeled_unrooted_tree& t, std::size_t alphabet) {
  if (t.max_label() > alphabet)
    throw std::out_of_range("label " + std::to_string(t.max_label()) + " exceeds alphabet size " +
                            std::to_string(alphabet));
  const var_set vars = var_set::labeled(alphabet);
  polynomial prod = polynomial::constant(vars, 1);
  for (const auto& r : t.contract_leaf_edges()) prod = prod * detail::p_labeled_body(r, vars);
  return prod;
}

// Sets every x_i to x, mapping a labeled polynomial into Z[x, y].
inline polynomial collapse_labels(const polynomial& p) {
  std::vector<std::size_t> table(p.vars().size(), 0);
  const auto y = p.vars().index_of("y");
  if (!y) throw std::invalid_argument("labeled polynomial has no y");
  table[*y] = 1;
  return remap(p, var_set::xy(), table);
}

// Label of every vertex, indexed by preorder position: leaves get x, an
// internal vertex v gets the polynomial of the affix tree at v.
inline std::vector<polynomial> vertex_labels(const rooted_tree& t) {
  std::vector<polynomial> out;
  for (const auto& v : preorder(t)) out.push_back(p_rooted(v.subtree));
  return out;
}

enum class eisenstein_failure {
  none,
  leading_not_one,                  // a_n != 1
  lower_not_divisible_by_y,         // some a_i, i < n, has a y-free term
  constant_divisible_by_y_squared,  // a_0 has no y^1 term
};

struct eisenstein_report {
  bool passes = false;
  eisenstein_failure failed_condition = eisenstein_failure::none;
};

inline std::string_view to_string(eisenstein_failure f) {
  switch (f) {
    case eisenstein_failure::none: return "none";
    case eisenstein_failure::leading_not_one: return "leading-coefficient";
    case eisenstein_failure::lower_not_divisible_by_y: return "lower-coefficients";
    case eisenstein_failure::constant_divisible_by_y_squared: return "constant-term";
  }
  return "?";
}

// Eisenstein conditions for P in Z[y][x] with the prime ideal (y).
inline eisenstein_report eisenstein_check(const polynomial& p) {
  if (!(p.vars() == var_set::xy())) throw var_set_mismatch("eisenstein_check needs Z[x,y]");
  if (p.is_zero()) throw std::invalid_argument("eisenstein_check of the zero polynomial");
  const unsigned n = p.degree_in("x");
  bool leading_is_one = false;
  bool leading_other = false;
  bool lower_ok = true;
  bool constant_has_linear_y = false;
  for (const auto& [m, c] : p.terms()) {
    const unsigned ex = m.exponents[0], ey = m.exponents[1];
    if (ex == n) {
      if (ey == 0 && c == 1)
        leading_is_one = true;
      else
        leading_other = true;
    } else if (ey == 0) {
      lower_ok = false;
    }
    if (ex == 0 && ey == 1) constant_has_linear_y = true;
  }
  if (!leading_is_one || leading_other) return {false, eisenstein_failure::leading_not_one};
  if (!lower_ok) return {false, eisenstein_failure::lower_not_divisible_by_y};
  if (!constant_has_linear_y) return {false, eisenstein_failure::constant_divisible_by_y_squared};
  return {true, eisenstein_failure::none};
}

}  // namespace tdp
