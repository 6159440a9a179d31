// tdpoly: compute, compare, verify, collide, reconstruct and enumerate.
//
// Exit codes: 0 success, 1 negative verdict (distinct, counterexample,
// unmet expectation, not a tree polynomial), 2 usage or parse error.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "tdp/catalog.hpp"
#include "tdp/invariant.hpp"
#include "tdp/newick.hpp"
#include "tdp/oracle.hpp"
#include "tdp/poly_json.hpp"
#include "tdp/reconstruct.hpp"

namespace {

using namespace tdp;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Variants

struct variant_spec {
  enum kind_t { plain, prime, labeled } kind = plain;
  integer value = 0;
};

variant_spec parse_variant(const std::string& s) {
  if (s == "p") return {};
  if (s == "p-labeled") return {variant_spec::labeled, 0};
  const std::string prefix = "p-prime:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string digits = s.substr(prefix.size());
    const auto body = digits.empty() || digits[0] != '-' ? digits : digits.substr(1);
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw usage_error("bad substitution value in --variant " + s);
    return {variant_spec::prime, integer(digits)};
  }
  throw usage_error("unknown --variant " + s + " (expected p, p-prime:<n> or p-labeled)");
}

// ---------------------------------------------------------------------------
// Tree input

struct tree_input {
  std::string sort = "rooted";
  std::string format = "dyck";
};

polynomial polynomial_of(const std::string& text, const tree_input& in, const variant_spec& v) {
  const bool unrooted = in.sort == "unrooted";
  if (v.kind == variant_spec::labeled) {
    if (in.format != "newick") throw usage_error("p-labeled needs --format newick with named leaves");
    const auto parsed = parse_labeled_newick(text);
    const std::size_t alphabet = parsed.names.size();
    if (!unrooted) return p_labeled(parsed.tree, alphabet);
    return p_labeled(labeled_unrooted_tree::from_rooted(parsed.tree), alphabet);
  }
  const rooted_tree shape = in.format == "dyck" ? parse_dyck(text) : parse_newick(text);
  polynomial p;
  if (unrooted) {
    if (shape.is_trivial()) throw usage_error("unrooted trees need at least 2 vertices");
    p = p_unrooted(unrooted_tree::from_rooted(shape));
  } else {
    p = in.format == "dyck" ? p_from_dyck(text) : p_rooted(shape);
  }
  return v.kind == variant_spec::prime ? substitute(p, "y", v.value) : p;
}

std::string render(const polynomial& p, const std::string& out) {
  return out == "json" ? to_json(p) : to_text(p);
}

// ---------------------------------------------------------------------------
// Catalogs

std::vector<rooted_tree> rooted_up_to(std::size_t max) {
  std::vector<rooted_tree> out;
  for (std::size_t n = 1; n <= max; ++n)
    for (auto& t : enumerate_rooted(n)) out.push_back(std::move(t));
  return out;
}

std::vector<unrooted_tree> unrooted_up_to(std::size_t max) {
  std::vector<unrooted_tree> out;
  for (std::size_t n = 2; n <= max; ++n)
    for (auto& t : enumerate_unrooted(n)) out.push_back(std::move(t));
  return out;
}

tree_catalog catalog_for(const std::string& cls, std::size_t size) {
  if (cls == "rooted") return {tree_class::rooted, size};
  if (cls == "unrooted") return {tree_class::unrooted, size};
  if (cls == "binary") return {tree_class::rooted_mary, size, 2};
  if (cls == "root-degree-gt1") return {tree_class::root_degree_gt1, size};
  if (cls == "unrooted-binary") return {tree_class::unrooted_mary, size, 2};
  throw usage_error("unknown --class " + cls);
}

std::size_t first_size(const tree_catalog& cat) {
  return cat.kind == tree_class::unrooted || cat.kind == tree_class::unrooted_mary ? 2 : 1;
}

// ---------------------------------------------------------------------------
// verify suites. Each returns the number of trees checked, or the first
// counterexample.

struct sweep_result {
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
};

sweep_result verify_lemma2(std::size_t max) {
  const auto trees = rooted_up_to(max);
  for (const auto& t : trees) {
    const auto expected = p_rooted(t);
    if (!(generating_function(t) == expected)) return {0, t.code() + ": subtree sum differs from P"};
    if (!(expected.coefficient_sum() == integer(primary_subtrees(t).size())))
      return {0, t.code() + ": coefficient sum differs from subtree count"};
  }
  return {trees.size(), std::nullopt};
}

sweep_result verify_eisenstein(std::size_t max) {
  const auto rooted = rooted_up_to(max);
  const auto unrooted = unrooted_up_to(max);
  for (const auto& t : rooted)
    if (!t.is_trivial() && !eisenstein_check(p_rooted(t)).passes) return {0, t.code() + ": rooted tree fails"};
  for (const auto& u : unrooted)
    if (eisenstein_check(p_unrooted(u)).passes) return {0, "unrooted " + u.code() + ": product passes"};
  return {rooted.size() + unrooted.size(), std::nullopt};
}

sweep_result verify_injectivity(std::size_t max) {
  const auto rooted = rooted_up_to(max);
  const auto unrooted = unrooted_up_to(max);
  const auto r = collision_search(rooted, [](const rooted_tree& t) { return p_rooted(t); });
  if (!r.empty()) return {0, to_json_line(r.front())};
  const auto u = collision_search(unrooted, [](const unrooted_tree& t) { return p_unrooted(t); });
  if (!u.empty()) return {0, to_json_line(u.front())};
  std::set<std::string> rooted_keys;
  for (const auto& t : rooted) rooted_keys.insert(to_text(p_rooted(t)));
  for (const auto& t : unrooted)
    if (rooted_keys.count(to_text(p_unrooted(t))))
      return {0, "unrooted " + t.code() + " shares its polynomial with a rooted tree"};
  return {rooted.size() + unrooted.size(), std::nullopt};
}

sweep_result verify_roundtrip(std::size_t max) {
  const auto rooted = rooted_up_to(max);
  const auto unrooted = unrooted_up_to(max);
  for (const auto& t : rooted) {
    try {
      if (!(reconstruct_rooted(p_rooted(t)) == t)) return {0, t.code() + ": reconstructs to another tree"};
    } catch (const not_a_tree_polynomial& e) {
      return {0, t.code() + ": " + e.what()};
    }
  }
  for (const auto& u : unrooted) {
    try {
      const auto back = reconstruct_general(p_unrooted(u));
      const auto* got = std::get_if<unrooted_tree>(&back);
      if (!got || !(*got == u)) return {0, "unrooted " + u.code() + ": reconstructs to another tree"};
    } catch (const not_a_tree_polynomial& e) {
      return {0, "unrooted " + u.code() + ": " + e.what()};
    }
  }
  return {rooted.size() + unrooted.size(), std::nullopt};
}

sweep_result verify_contraction(std::size_t max) {
  const auto trees = unrooted_up_to(max);
  std::map<std::vector<std::string>, std::string> owner;
  for (const auto& u : trees) {
    std::vector<std::string> codes;
    for (const auto& r : contract_leaf_edges(u)) {
      if (!(reattach_root_leaf(r) == u)) return {0, "unrooted " + u.code() + ": reattaching " + r.code() + " fails"};
      codes.push_back(r.code());
    }
    auto [it, fresh] = owner.emplace(codes, u.code());
    if (!fresh) return {0, "unrooted " + u.code() + " and " + it->second + " share a contraction set"};
  }
  return {trees.size(), std::nullopt};
}

struct suite {
  sweep_result (*run)(std::size_t);
  std::size_t limit;
};

const std::map<std::string, suite>& suites() {
  static const std::map<std::string, suite> table{
      {"lemma2", {verify_lemma2, 12}},         {"eisenstein", {verify_eisenstein, 14}},
      {"injectivity", {verify_injectivity, 14}}, {"roundtrip", {verify_roundtrip, 11}},
      {"contraction", {verify_contraction, 14}},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Reconstruction input: any polynomial whose variables are among x and y.

polynomial as_xy(const polynomial& p) {
  if (p.vars() == var_set::xy()) return p;
  std::vector<std::size_t> table;
  for (const auto& name : p.vars().names()) {
    if (name == "x")
      table.push_back(0);
    else if (name == "y")
      table.push_back(1);
    else
      throw not_a_tree_polynomial("variable " + name + " is not x or y");
  }
  return remap(p, var_set::xy(), table);
}

int run(int argc, char** argv) {
  CLI::App app{"Tree-distinguishing polynomial toolkit"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Print the polynomial of a tree");
  std::string c_input, c_variant = "p", c_out = "text";
  tree_input c_in;
  compute->add_option("input", c_input, "Tree as a Dyck word or Newick string")->required();
  compute->add_option("--sort", c_in.sort, "Tree sort")->required()->check(CLI::IsMember({"rooted", "unrooted"}));
  compute->add_option("--format", c_in.format, "Input format")->check(CLI::IsMember({"dyck", "newick"}));
  compute->add_option("--variant", c_variant, "p, p-prime:<n> or p-labeled");
  compute->add_option("--out", c_out, "Output format")->check(CLI::IsMember({"text", "json"}));

  // compare
  auto* compare = app.add_subcommand("compare", "Decide isomorphism by polynomial equality");
  std::string a_input, b_input, cmp_variant = "p", cmp_format = "dyck";
  std::optional<std::string> cmp_sort, sort_a, sort_b;
  compare->add_option("a", a_input, "First tree")->required();
  compare->add_option("b", b_input, "Second tree")->required();
  compare->add_option("--sort", cmp_sort, "Sort of both trees")->check(CLI::IsMember({"rooted", "unrooted"}));
  compare->add_option("--sort-a", sort_a, "Sort of the first tree")->check(CLI::IsMember({"rooted", "unrooted"}));
  compare->add_option("--sort-b", sort_b, "Sort of the second tree")->check(CLI::IsMember({"rooted", "unrooted"}));
  compare->add_option("--format", cmp_format, "Input format")->check(CLI::IsMember({"dyck", "newick"}));
  compare->add_option("--variant", cmp_variant, "p, p-prime:<n> or p-labeled");

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive sweep of one property");
  std::string v_suite;
  std::size_t v_max = 0;
  verify->add_option("suite", v_suite, "lemma2, eisenstein, injectivity, roundtrip or contraction")->required();
  verify->add_option("--max-size", v_max, "Largest vertex count")->required()->check(CLI::PositiveNumber);

  // collide
  auto* collide = app.add_subcommand("collide", "Search a catalog for invariant collisions");
  std::string k_class = "rooted", k_variant = "p";
  std::size_t k_max = 0;
  bool expect_collision = false, expect_injective = false;
  collide->add_option("--class", k_class, "rooted, unrooted, binary, root-degree-gt1 or unrooted-binary");
  collide->add_option("--max-size", k_max, "Largest size (leaves for binary, vertices otherwise)")
      ->required()
      ->check(CLI::PositiveNumber);
  collide->add_option("--variant", k_variant, "p or p-prime:<n>");
  auto* ec = collide->add_flag("--expect-collision", expect_collision, "Succeed only if a collision exists");
  auto* ei = collide->add_flag("--expect-injective", expect_injective, "Succeed only if none exists");
  ec->excludes(ei);

  // reconstruct
  auto* recon = app.add_subcommand("reconstruct", "Recover a tree from its polynomial");
  std::string r_input;
  recon->add_option("polynomial", r_input, "Polynomial in text or JSON form")->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List a catalog, one Dyck word per line");
  std::string e_class = "rooted";
  std::size_t e_size = 0;
  enumerate->add_option("--class", e_class, "rooted, unrooted, binary, root-degree-gt1 or unrooted-binary");
  enumerate->add_option("--size", e_size, "Vertex count (leaf count for binary)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (compute->parsed()) {
    std::cout << render(polynomial_of(c_input, c_in, parse_variant(c_variant)), c_out) << '\n';
    return kOk;
  }

  if (compare->parsed()) {
    const auto sa = sort_a ? sort_a : cmp_sort;
    const auto sb = sort_b ? sort_b : cmp_sort;
    if (!sa || !sb) throw usage_error("compare needs --sort, or both --sort-a and --sort-b");
    if (*sa != *sb) throw usage_error("cannot compare a " + *sa + " tree with a " + *sb + " tree");
    const auto v = parse_variant(cmp_variant);
    const auto pa = polynomial_of(a_input, {*sa, cmp_format}, v);
    const auto pb = polynomial_of(b_input, {*sb, cmp_format}, v);
    std::cout << to_text(pa) << '\n' << to_text(pb) << '\n';
    const bool same = pa == pb;
    std::cout << (same ? "isomorphic" : "distinct") << '\n';
    return same ? kOk : kNegative;
  }

  if (verify->parsed()) {
    const auto it = suites().find(v_suite);
    if (it == suites().end()) throw usage_error("unknown suite " + v_suite);
    if (v_max > it->second.limit)
      throw usage_error("--max-size for " + v_suite + " is limited to " + std::to_string(it->second.limit));
    const auto result = it->second.run(v_max);
    if (result.counterexample) {
      std::cout << "counterexample: " << *result.counterexample << '\n';
      return kNegative;
    }
    std::cout << "checked " << result.checked << " trees: OK\n";
    return kOk;
  }

  if (collide->parsed()) {
    const auto v = parse_variant(k_variant);
    if (v.kind == variant_spec::labeled) throw usage_error("collide supports p and p-prime:<n>");
    auto inv = [&v](const auto& t) {
      polynomial p;
      if constexpr (std::is_same_v<std::decay_t<decltype(t)>, unrooted_tree>)
        p = p_unrooted(t);
      else
        p = p_rooted(t);
      return v.kind == variant_spec::prime ? substitute(p, "y", v.value) : p;
    };
    std::vector<collision_group> groups;
    const auto probe = catalog_for(k_class, k_max);
    if (is_unrooted_class(probe.kind)) {
      std::vector<unrooted_tree> trees;
      for (std::size_t n = first_size(probe); n <= k_max; ++n)
        for (auto& t : unrooted_catalog(catalog_for(k_class, n))) trees.push_back(std::move(t));
      groups = collision_search(trees, inv);
    } else {
      std::vector<rooted_tree> trees;
      for (std::size_t n = first_size(probe); n <= k_max; ++n)
        for (auto& t : rooted_catalog(catalog_for(k_class, n))) trees.push_back(std::move(t));
      groups = collision_search(trees, inv);
    }
    for (const auto& g : groups) std::cout << to_json_line(g) << '\n';
    if (expect_collision) return groups.empty() ? kNegative : kOk;
    if (expect_injective) return groups.empty() ? kOk : kNegative;
    return kOk;
  }

  if (recon->parsed()) {
    const polynomial parsed = parse_polynomial(r_input);
    try {
      const auto tree = reconstruct_general(as_xy(parsed));
      if (const auto* r = std::get_if<rooted_tree>(&tree))
        std::cout << "rooted " << to_dyck(*r) << '\n';
      else
        std::cout << "unrooted " << to_dyck(std::get<unrooted_tree>(tree)) << '\n';
      return kOk;
    } catch (const not_a_tree_polynomial& e) {
      std::cerr << "NotATreePolynomial: " << e.what() << '\n';
      return kNegative;
    }
  }

  if (enumerate->parsed()) {
    const auto cat = catalog_for(e_class, e_size);
    if (e_size < first_size(cat)) throw usage_error("--size too small for class " + e_class);
    for (const auto& w : catalog_dyck_words(cat)) std::cout << w << '\n';
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tdp::parse_error& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
