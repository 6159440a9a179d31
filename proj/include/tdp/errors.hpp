#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdp {

// Malformed Dyck word, Newick string or polynomial text. `position` is the
// zero-based offset into the input where parsing stopped.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class var_set_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input polynomial is not the polynomial of any tree of the requested sort.
class not_a_tree_polynomial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tdp
