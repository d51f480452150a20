#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "endo.hpp"

namespace mcgb {

/// A letter in a word over the standard Dehn twist generators a_i, b_i, w_i.
struct McgGenerator {
  enum class Name : std::uint8_t { A, B, W };
  Name name;
  std::int32_t index;  // >= 1
  std::int8_t sign;    // +1 or -1

  friend bool operator==(const McgGenerator&, const McgGenerator&) = default;
  [[nodiscard]] McgGenerator inverse() const {
    return {name, index, static_cast<std::int8_t>(-sign)};
  }
  [[nodiscard]] bool cancels(const McgGenerator& o) const {
    return name == o.name && index == o.index && sign == -o.sign;
  }
};

/// Freely reduced sequence of twist generators. This is a word-level normal
/// form only; distinct McgWords may denote the same mapping class.
class McgWord {
 public:
  McgWord() = default;
  explicit McgWord(std::span<const McgGenerator> letters);

  void push(const McgGenerator& g);
  void append(const McgWord& other);
  /// Append other^n; negative n appends the reversed inverse letters.
  void append_power(const McgWord& other, int n);

  [[nodiscard]] const std::vector<McgGenerator>& letters() const {
    return letters_;
  }
  [[nodiscard]] McgWord inverse() const;
  friend bool operator==(const McgWord&, const McgWord&) = default;

 private:
  std::vector<McgGenerator> letters_;
};

/// Twist along the i-th handle's x-curve: y_i -> y_i x_i^-1.
[[nodiscard]] MappingClass dehn_a(int i, int genus);

/// Twist along the i-th handle's y-curve: x_i -> x_i y_i.
[[nodiscard]] MappingClass dehn_b(int i, int genus);

/// Twist along the curve joining handles i and i+1:
///   x_i -> z^-1 y_{i+1} x_{i+1} y_{i+1}^-1,  y_i -> y_i z,
///   y_{i+1} -> z^-1 y_{i+1},  with z = x_i^-1 y_{i+1} x_{i+1} y_{i+1}^-1.
[[nodiscard]] MappingClass dehn_w(int i, int genus);

[[nodiscard]] MappingClass catalog_class(const McgGenerator& g, int genus);

/// Left-to-right composition of the catalog classes: the leftmost letter
/// acts first. The empty word evaluates to the identity.
[[nodiscard]] MappingClass evaluate_mcg_word(const McgWord& word, int genus);

[[nodiscard]] bool preserves_relator(const Endo& f, int genus);

/// Text format: tokens `a<k>`, `b<k>`, `w<k>` with optional `^-1` or a
/// nonzero integer power, plus parenthesised groups, e.g.
/// `(a1 b1 a1)^4 (a2 b2 (a1 b1 a1)^-1 w1 a1 b1 a1^2 b1)^-3`.
[[nodiscard]] McgWord parse_mcg_word(std::string_view text);
[[nodiscard]] std::string format_mcg_word(const McgWord& w);

}  // namespace mcgb
