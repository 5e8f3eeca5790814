#ifndef DEQUIV_EXPR_HPP_
#define DEQUIV_EXPR_HPP_

#include <dequiv/sheaf.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dequiv::sheaf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string_view input);

  [[nodiscard]] std::size_t position() const { return position_; }
  [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Bundle expressions:
///
///   expr  := term ("*" term)*
///   term  := prim ("(" lin ")")*
///   prim  := "O(" lin ")" | "U" | "Ud" | "K" | "Kd" | "Sprime" | "dual(" expr ")"
///   lin   := signed integer combination of h and H, e.g. "3h-2H", "-h", "0"
///
/// Whitespace is ignored.
FilteredBundle parse_bundle(std::string_view text);

LineClass parse_line_class(std::string_view text);

}  // namespace dequiv::sheaf

#endif  // DEQUIV_EXPR_HPP_
