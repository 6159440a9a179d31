#pragma once

// Recovering a tree from its polynomial.
//
// A rooted polynomial is inverted by reading the stem length off the y
// coefficient, removing the branching vertex's y, and splitting the rest into
// child polynomials. Splitting is trial division by tree polynomials drawn
// from a candidate pool ordered by coefficient sum: tree polynomials are
// irreducible and monic in x, so any tree polynomial dividing a product of
// tree polynomials is one of its factors.

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tdp/errors.hpp"
#include "tdp/invariant.hpp"
#include "tdp/polyring.hpp"
#include "tdp/trees.hpp"

namespace tdp {

namespace detail {

inline const polynomial& poly_x() {
  static const polynomial x = polynomial::variable(var_set::xy(), "x");
  return x;
}

inline const polynomial& poly_y() {
  static const polynomial y = polynomial::variable(var_set::xy(), "y");
  return y;
}

inline const polynomial& poly_one() {
  static const polynomial one = polynomial::constant(var_set::xy(), 1);
  return one;
}

inline rooted_tree add_stem(rooted_tree t, std::size_t length) {
  for (std::size_t i = 0; i < length; ++i) t = wedge({std::move(t)});
  return t;
}

// Largest c with c^k <= value (value >= 1, k >= 1).
inline std::size_t integer_root(const integer& value, std::size_t k) {
  std::size_t c = 1;
  for (;;) {
    integer power = 1;
    for (std::size_t i = 0; i < k && power <= value; ++i) power *= c + 1;
    if (power > value) return c;
    ++c;
  }
}

inline std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace detail

// All rooted trees with exactly `leaves` leaves whose polynomial has
// coefficient sum `coef_sum` (the number of primary subtrees). Finite because
// every internal vertex accounts for a distinct primary subtree.
inline const std::vector<rooted_tree>& trees_with(std::size_t leaves, std::size_t coef_sum) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<rooted_tree>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({leaves, coef_sum}); it != memo.end()) return it->second;
  }
  std::vector<rooted_tree> out;
  if (leaves == 1) {
    if (coef_sum >= 1) out.push_back(rooted_path(coef_sum - 1));
  } else if (leaves >= 2 && coef_sum >= 2) {
    // Stem of length l over a branching core with coefficient sum coef_sum - l,
    // whose children have coefficient sums multiplying to coef_sum - l - 1.
    for (std::size_t l = 0; l + 2 <= coef_sum; ++l) {
      const std::size_t product = coef_sum - l - 1;
      std::vector<std::pair<std::size_t, rooted_tree>> pool;  // (coef sum, tree)
      std::vector<std::size_t> pool_leaves;
      for (std::size_t n = 1; n < leaves; ++n)
        for (auto d : detail::divisors(product))
          for (const auto& t : trees_with(n, d)) {
            pool.emplace_back(d, t);
            pool_leaves.push_back(n);
          }
      std::vector<rooted_tree> chosen;
      auto pick = [&](auto&& self, std::size_t from, std::size_t left_leaves,
                      std::size_t left_product) -> void {
        if (left_leaves == 0) {
          if (left_product == 1 && chosen.size() >= 2) out.push_back(detail::add_stem(wedge(chosen), l));
          return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
          if (pool_leaves[i] > left_leaves || left_product % pool[i].first != 0) continue;
          chosen.push_back(pool[i].second);
          self(self, i, left_leaves - pool_leaves[i], left_product / pool[i].first);
          chosen.pop_back();
        }
      };
      pick(pick, 0, leaves, product);
    }
  }
  std::lock_guard lock(mutex);
  return memo.emplace(std::pair{leaves, coef_sum}, std::move(out)).first->second;
}

struct stem_split {
  std::size_t length = 0;
  polynomial affix;  // polynomial of the affix tree at the branching vertex
};

// Checks that P looks like a rooted tree polynomial before any division:
// over Z[x,y], positive coefficients, and x alone or Eisenstein-shaped.
inline void require_rooted_shape(const polynomial& p) {
  if (!(p.vars() == var_set::xy())) throw not_a_tree_polynomial("expected a polynomial in x and y");
  if (p.is_zero()) throw not_a_tree_polynomial("zero polynomial");
  for (const auto& [m, c] : p.terms())
    if (c <= 0) throw not_a_tree_polynomial("non-positive coefficient");
  if (p == detail::poly_x()) return;
  const auto report = eisenstein_check(p);
  if (!report.passes)
    throw not_a_tree_polynomial("fails the " + std::string(to_string(report.failed_condition)) +
                                " condition");
}

inline stem_split infer_stem(const polynomial& p) {
  require_rooted_shape(p);
  if (p == detail::poly_x()) return {0, p};
  const monomial y_mono(std::vector<unsigned>{0, 1});
  const integer t = p.coefficient(y_mono);
  if (p.degree_in("x") == 1) {
    // Rooted path: exactly x + l*y.
    if (p.term_count() != 2) throw not_a_tree_polynomial("single-leaf polynomial is not x + l*y");
    return {static_cast<std::size_t>(t), detail::poly_x()};
  }
  if (t < 1) throw not_a_tree_polynomial("negative stem length");
  const integer l = t - 1;
  polynomial affix = p - l * detail::poly_y();
  require_rooted_shape(affix);
  return {static_cast<std::size_t>(l), std::move(affix)};
}

struct factor_options {
  // Known number of factors and leaves per factor (unrooted inversion).
  std::optional<std::size_t> factor_count;
  std::optional<std::size_t> factor_leaves;
  // Maximum internal vertices of a candidate; default coefficient_sum(Q) - 1.
  std::optional<std::size_t> internal_budget;
};

struct factorization {
  std::vector<polynomial> factors;  // tree polynomials, in discovery order
  polynomial remainder;             // 1 when complete
  bool complete = false;
};

// Splits Q into tree polynomials by trial division. The factor of smallest
// coefficient sum c satisfies c^k <= coefficient_sum(Q) for k factors, so each
// round only scans candidates up to that bound; if none divides, the
// remainder is taken as a single factor when it is Eisenstein-shaped.
inline factorization factor_tree_product(const polynomial& q, const factor_options& opts = {}) {
  if (!(q.vars() == var_set::xy())) throw var_set_mismatch("factor_tree_product needs Z[x,y]");
  factorization out{{}, q, false};
  if (q.is_zero()) return out;
  const integer total = q.coefficient_sum();
  if (total < 1) return out;
  const std::size_t budget =
      opts.internal_budget.value_or(static_cast<std::size_t>(total) - 1);

  polynomial rem = q;
  std::optional<std::size_t> left = opts.factor_count;
  while (!(rem == detail::poly_one())) {
    if (left && *left == 0) return out;
    const integer rem_sum = rem.coefficient_sum();
    if (rem_sum < 1) return out;
    const auto rem_sum_small = static_cast<std::size_t>(rem_sum);
    const std::size_t rem_leaves = rem.degree_in("x");
    const std::size_t k = left ? *left : 2;
    const std::size_t bound = detail::integer_root(rem_sum, k);
    bool found = false, over_budget = false;
    for (std::size_t c = 1; c <= bound && !found; ++c) {
      if (rem_sum_small % c != 0) continue;
      const std::size_t lo = opts.factor_leaves.value_or(1);
      const std::size_t hi = opts.factor_leaves.value_or(rem_leaves);
      for (std::size_t n = lo; n <= hi && n <= rem_leaves && !found; ++n) {
        for (const auto& cand : trees_with(n, c)) {
          if (cand.internal_count() > budget) {
            over_budget = true;
            continue;
          }
          const polynomial f = p_rooted(cand);
          if (auto quotient = try_div_exact(rem, f)) {
            out.factors.push_back(f);
            rem = std::move(*quotient);
            if (left) --*left;
            found = true;
            break;
          }
        }
      }
    }
    if (found) continue;
    if (over_budget) break;
    if (left && *left != 1) break;
    // No factor within the bound: rem must itself be a single tree polynomial.
    const bool shaped = rem == detail::poly_x() ||
                        (rem.degree_in("x") >= 1 && eisenstein_check(rem).passes);
    if (!shaped) break;
    out.factors.push_back(rem);
    rem = detail::poly_one();
    if (left) --*left;
  }
  out.remainder = rem;
  out.complete = rem == detail::poly_one() && (!left || *left == 0);
  return out;
}

// Throws not_a_tree_polynomial unless p is the polynomial of a rooted tree;
// the result's polynomial is checked to equal p.
inline rooted_tree reconstruct_rooted(const polynomial& p) {
  const auto [stem, affix] = infer_stem(p);
  if (affix == detail::poly_x()) return rooted_path(stem);
  const polynomial product = affix - detail::poly_y();
  const auto split = factor_tree_product(product);
  if (!split.complete) throw not_a_tree_polynomial("could not factor into tree polynomials");
  if (split.factors.size() < 2) throw not_a_tree_polynomial("branching vertex with a single child");
  std::vector<rooted_tree> children;
  for (const auto& f : split.factors) children.push_back(reconstruct_rooted(f));
  rooted_tree t = detail::add_stem(wedge(std::move(children)), stem);
  if (!(p_rooted(t) == p)) throw not_a_tree_polynomial("reconstruction does not reproduce the input");
  return t;
}

using any_tree = std::variant<rooted_tree, unrooted_tree>;

// Rooted polynomials are irreducible and unrooted ones are products of one
// factor per leaf, each with one leaf fewer than the unrooted tree.
inline any_tree reconstruct_general(const polynomial& p) {
  try {
    return reconstruct_rooted(p);
  } catch (const not_a_tree_polynomial&) {
  }
  if (!(p.vars() == var_set::xy()) || p.is_zero())
    throw not_a_tree_polynomial("expected a nonzero polynomial in x and y");
  const std::size_t degree = p.degree_in("x");
  std::size_t leaves = 2;
  while (leaves * (leaves - 1) < degree) ++leaves;
  if (leaves * (leaves - 1) != degree) throw not_a_tree_polynomial("x-degree is not n(n-1)");
  const auto split = factor_tree_product(p, {leaves, leaves - 1, std::nullopt});
  if (!split.complete || split.factors.size() != leaves)
    throw not_a_tree_polynomial("could not factor into leaf-edge contractions");
  const rooted_tree first = reconstruct_rooted(split.factors.front());
  unrooted_tree candidate = reattach_root_leaf(first);
  if (!(p_unrooted(candidate) == p))
    throw not_a_tree_polynomial("contraction factors do not come from one unrooted tree");
  return candidate;
}

}  // namespace tdp
