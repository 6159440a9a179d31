#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients. Terms are kept in graded-lexicographic descending order, so
// iteration order is the canonical serialization order.

#include <algorithm>
#include <cctype>
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

#include <boost/multiprecision/cpp_int.hpp>

#include "tdp/errors.hpp"

namespace tdp {

using integer = boost::multiprecision::cpp_int;

// Ordered list of variable names. If "y" is present it is the last variable.
class var_set {
 public:
  var_set() : names_(std::make_shared<const std::vector<std::string>>()) {}

  explicit var_set(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw std::invalid_argument("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j])
          throw std::invalid_argument("duplicate variable '" + names[i] + "'");
      if (names[i] == "y" && i + 1 != names.size())
        throw std::invalid_argument("variable y must be last");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  static const var_set& xy() {
    static const var_set vs({"x", "y"});
    return vs;
  }

  static const var_set& x_only() {
    static const var_set vs({"x"});
    return vs;
  }

  // x_1, ..., x_t, y
  static var_set labeled(std::size_t t) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= t; ++i) names.push_back("x_" + std::to_string(i));
    names.emplace_back("y");
    return var_set(std::move(names));
  }

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const var_set& a, const var_set& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct monomial {
  std::vector<unsigned> exponents;

  monomial() = default;
  explicit monomial(std::vector<unsigned> e) : exponents(std::move(e)) {}
  static monomial one(std::size_t nvars) { return monomial(std::vector<unsigned>(nvars, 0)); }

  std::size_t total_degree() const {
    std::size_t d = 0;
    for (auto e : exponents) d += e;
    return d;
  }

  bool divides(const monomial& other) const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > other.exponents[i]) return false;
    return true;
  }

  friend monomial operator*(const monomial& a, const monomial& b) {
    monomial r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
    return r;
  }

  // Precondition: divisor.divides(*this).
  monomial quotient(const monomial& divisor) const {
    monomial r = *this;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] -= divisor.exponents[i];
    return r;
  }

  friend bool operator==(const monomial&, const monomial&) = default;
};

// Strict weak order placing the grlex-larger monomial first.
struct grlex_descending {
  bool operator()(const monomial& a, const monomial& b) const {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(),
                                        a.exponents.begin(), a.exponents.end());
  }
};

class polynomial {
 public:
  using term_map = std::map<monomial, integer, grlex_descending>;

  polynomial() : polynomial(var_set::xy()) {}
  explicit polynomial(var_set vars) : vars_(std::move(vars)) {}

  static polynomial constant(const var_set& vars, const integer& c) {
    polynomial p(vars);
    if (c != 0) p.terms_.emplace(monomial::one(vars.size()), c);
    return p;
  }

  static polynomial variable(const var_set& vars, std::string_view name) {
    auto idx = vars.index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    monomial m = monomial::one(vars.size());
    m.exponents[*idx] = 1;
    polynomial p(vars);
    p.terms_.emplace(std::move(m), 1);
    return p;
  }

  // Like terms are merged and zero coefficients dropped.
  static polynomial from_terms(const var_set& vars,
                               std::vector<std::pair<monomial, integer>> terms) {
    polynomial p(vars);
    for (auto& [m, c] : terms) {
      if (m.exponents.size() != vars.size())
        throw std::invalid_argument("monomial arity does not match variable set");
      p.accumulate(std::move(m), c);
    }
    return p;
  }

  const var_set& vars() const noexcept { return vars_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Precondition: nonzero.
  const term_map::value_type& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.begin();
  }

  integer coefficient(const monomial& m) const {
    check_arity(m);
    auto it = terms_.find(m);
    return it == terms_.end() ? integer(0) : it->second;
  }

  // Highest exponent of `var` over all terms; 0 for the zero polynomial.
  unsigned degree_in(std::string_view var) const {
    auto idx = vars_.index_of(var);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponents[*idx]);
    return d;
  }

  integer coefficient_sum() const {
    integer s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  integer evaluate(std::span<const integer> point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point arity");
    integer s = 0;
    for (const auto& [m, c] : terms_) {
      integer t = c;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (unsigned e = 0; e < m.exponents[i]; ++e) t *= point[i];
      s += t;
    }
    return s;
  }

  friend polynomial operator+(const polynomial& a, const polynomial& b) {
    require_same_vars(a, b);
    polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.accumulate(m, c);
    return r;
  }

  friend polynomial operator-(const polynomial& a) {
    polynomial r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend polynomial operator-(const polynomial& a, const polynomial& b) {
    require_same_vars(a, b);
    polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.accumulate(m, -c);
    return r;
  }

  friend polynomial operator*(const polynomial& a, const polynomial& b) {
    require_same_vars(a, b);
    polynomial r(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.accumulate(ma * mb, ca * cb);
    return r;
  }

  friend polynomial operator*(const integer& k, const polynomial& a) {
    polynomial r(a.vars_);
    if (k == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, k * c);
    return r;
  }

  friend bool operator==(const polynomial& a, const polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void accumulate(monomial m, const integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void check_arity(const monomial& m) const {
    if (m.exponents.size() != vars_.size())
      throw var_set_mismatch("monomial arity does not match variable set");
  }

  static void require_same_vars(const polynomial& a, const polynomial& b) {
    if (!(a.vars_ == b.vars_)) throw var_set_mismatch("polynomials over different variable sets");
  }

  var_set vars_;
  term_map terms_;
};

inline polynomial pow(const polynomial& base, unsigned e) {
  polynomial r = polynomial::constant(base.vars(), 1);
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

// Replaces `var` by an integer and drops it from the variable set.
inline polynomial substitute(const polynomial& p, std::string_view var, const integer& value) {
  auto idx = p.vars().index_of(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.vars().size(); ++i)
    if (i != *idx) names.push_back(p.vars().name(i));
  var_set reduced = (names == var_set::xy().names())       ? var_set::xy()
                    : (names == var_set::x_only().names()) ? var_set::x_only()
                                                           : var_set(std::move(names));
  std::vector<std::pair<monomial, integer>> out;
  out.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    integer coef = c;
    for (unsigned e = 0; e < m.exponents[*idx]; ++e) coef *= value;
    std::vector<unsigned> ex;
    ex.reserve(m.exponents.size() - 1);
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (i != *idx) ex.push_back(m.exponents[i]);
    out.emplace_back(monomial(std::move(ex)), std::move(coef));
  }
  return polynomial::from_terms(reduced, std::move(out));
}

// Moves every variable i of `p` to variable source_to_target[i] of `target`.
// Several source variables may map to the same target (identification).
inline polynomial remap(const polynomial& p, const var_set& target,
                        std::span<const std::size_t> source_to_target) {
  if (source_to_target.size() != p.vars().size())
    throw std::invalid_argument("remap table arity");
  std::vector<std::pair<monomial, integer>> out;
  for (const auto& [m, c] : p.terms()) {
    monomial t = monomial::one(target.size());
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (source_to_target[i] >= target.size()) throw std::out_of_range("remap target index");
      t.exponents[source_to_target[i]] += m.exponents[i];
    }
    out.emplace_back(std::move(t), c);
  }
  return polynomial::from_terms(target, std::move(out));
}

// Exact division over the integers. Division by the grlex leading term: if
// den divides num, every partial remainder is a multiple of den, so a
// leading-term or coefficient mismatch certifies non-divisibility.
inline std::optional<polynomial> try_div_exact(const polynomial& num, const polynomial& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (!(num.vars() == den.vars())) throw var_set_mismatch("polynomials over different variable sets");
  const auto& [lead_m, lead_c] = den.leading_term();
  std::vector<std::pair<monomial, integer>> quotient;
  polynomial rem = num;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lead_m.divides(rm)) return std::nullopt;
    integer q, r;
    boost::multiprecision::divide_qr(rc, lead_c, q, r);
    if (r != 0) return std::nullopt;
    monomial qm = rm.quotient(lead_m);
    polynomial step = polynomial::from_terms(num.vars(), {{qm, q}});
    rem = rem - step * den;
    quotient.emplace_back(std::move(qm), std::move(q));
  }
  return polynomial::from_terms(num.vars(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// Text form: "x^2 + 2*y", graded-lex descending.

inline std::string to_text(const polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const integer mag = negative ? integer(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += p.vars().name(i);
      if (m.exponents[i] > 1) mono += '^' + std::to_string(m.exponents[i]);
    }
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + '*' + mono;
  }
  return out;
}

namespace detail {

class poly_text_parser {
 public:
  explicit poly_text_parser(std::string_view s) : s_(s) {}

  struct raw_term {
    integer coef;
    std::vector<std::pair<std::string, unsigned>> powers;
  };

  std::vector<raw_term> parse() {
    std::vector<raw_term> terms;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s_[pos_++] == '-';
    for (;;) {
      raw_term t = term();
      if (negative) t.coef = -t.coef;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == s_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = s_[pos_++] == '-';
    }
    return terms;
  }

 private:
  raw_term term() {
    raw_term t{1, {}};
    for (;;) {
      skip_ws();
      if (pos_ == s_.size()) fail("expected a factor");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coef *= integer(digits());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = identifier();
        unsigned e = 1;
        skip_ws();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected exponent");
          e = static_cast<unsigned>(std::stoul(digits()));
        }
        t.powers.emplace_back(std::move(name), e);
      } else {
        fail("unexpected character");
      }
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline polynomial assemble(const std::vector<poly_text_parser::raw_term>& raw, const var_set& vars) {
  std::vector<std::pair<monomial, integer>> terms;
  for (const auto& t : raw) {
    monomial m = monomial::one(vars.size());
    for (const auto& [name, e] : t.powers) {
      auto idx = vars.index_of(name);
      if (!idx) throw parse_error("unknown variable '" + name + "'", 0);
      m.exponents[*idx] += e;
    }
    terms.emplace_back(std::move(m), t.coef);
  }
  return polynomial::from_terms(vars, std::move(terms));
}

// Numeric suffix aware ordering so x_2 sorts before x_10.
inline bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    return std::pair{s.substr(0, i), i < s.size() ? std::stoull(s.substr(i)) : 0ULL};
  };
  return split(a) < split(b);
}

}  // namespace detail

inline polynomial parse_polynomial_text(std::string_view s, const var_set& vars) {
  return detail::assemble(detail::poly_text_parser(s).parse(), vars);
}

// Infers the variable set: {x, y} when only x and y occur, otherwise the
// other identifiers in natural order followed by y.
inline polynomial parse_polynomial_text(std::string_view s) {
  auto raw = detail::poly_text_parser(s).parse();
  std::vector<std::string> names;
  for (const auto& t : raw)
    for (const auto& [name, e] : t.powers)
      if (name != "y" && std::find(names.begin(), names.end(), name) == names.end())
        names.push_back(name);
  if (names.empty() || (names.size() == 1 && names[0] == "x"))
    return detail::assemble(raw, var_set::xy());
  std::sort(names.begin(), names.end(), detail::natural_less);
  names.emplace_back("y");
  return detail::assemble(raw, var_set(std::move(names)));
}

}  // namespace tdp
