#pragma once

// JSON interchange form of a polynomial:
//   {"vars":["x","y"],"terms":[{"exp":[2,0],"coef":"1"},{"exp":[0,1],"coef":"2"}]}
// Coefficients are decimal strings, terms in canonical order.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tdp/errors.hpp"
#include "tdp/polyring.hpp"

namespace tdp {

inline nlohmann::ordered_json to_json_value(const polynomial& p) {
  nlohmann::ordered_json j;
  j["vars"] = p.vars().names();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = m.exponents;
    t["coef"] = c.str();
    j["terms"].push_back(std::move(t));
  }
  return j;
}

inline std::string to_json(const polynomial& p) { return to_json_value(p).dump(); }

inline polynomial parse_polynomial_json(std::string_view s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  try {
    var_set vars(j.at("vars").get<std::vector<std::string>>());
    std::vector<std::pair<monomial, integer>> terms;
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("exp").get<std::vector<unsigned>>();
      if (exps.size() != vars.size()) throw parse_error("exponent vector arity mismatch", 0);
      const auto coef = t.at("coef").get<std::string>();
      if (coef.empty() || coef.find_first_not_of("-0123456789") != std::string::npos)
        throw parse_error("coefficient is not a decimal integer", 0);
      terms.emplace_back(monomial(std::move(exps)), integer(coef));
    }
    return polynomial::from_terms(vars, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed polynomial JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("malformed polynomial JSON: ") + e.what(), 0);
  }
}

// Accepts either serialization; JSON is recognised by a leading '{'.
inline polynomial parse_polynomial(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && s[first] == '{') return parse_polynomial_json(s);
  return parse_polynomial_text(s);
}

}  // namespace tdp
