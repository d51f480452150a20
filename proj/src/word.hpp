#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcgb {

// Error taxonomy shared across the library. The C API maps these to status
// codes; the CLI maps them to exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidGenusError : Error {
  using Error::Error;
};
struct InvalidIndexError : Error {
  using Error::Error;
};
struct InvalidRangeError : Error {
  using Error::Error;
};
struct RankMismatchError : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// Surface generator alphabet: x_i and y_i, 1-based handle index.
enum class GenKind : std::uint8_t { X, Y };

struct GenSymbol {
  GenKind kind;
  std::int32_t index;  // >= 1
  std::int8_t sign;    // +1 or -1

  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;

  [[nodiscard]] GenSymbol inverse() const {
    return {kind, index, static_cast<std::int8_t>(-sign)};
  }
  [[nodiscard]] bool cancels(const GenSymbol& o) const {
    return kind == o.kind && index == o.index && sign == -o.sign;
  }
};

[[nodiscard]] GenSymbol x_gen(int index, int sign = +1);
[[nodiscard]] GenSymbol y_gen(int index, int sign = +1);

/// A freely reduced word in the surface generators. The empty word is the
/// identity. Reduction is maintained as a class invariant: every constructor
/// cancels adjacent inverse pairs, so letterwise equality of two Word values
/// is equality in the free group.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const GenSymbol> letters);
  explicit Word(std::initializer_list<GenSymbol> letters);

  [[nodiscard]] static Word generator(GenKind kind, int index, int sign = +1);

  [[nodiscard]] const std::vector<GenSymbol>& letters() const {
    return letters_;
  }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }

  /// Largest handle index appearing in the word; 0 for the empty word.
  [[nodiscard]] int max_index() const;

  friend bool operator==(const Word&, const Word&) = default;

  /// Append a single letter, cancelling against the current last letter.
  void push(const GenSymbol& g);

 private:
  std::vector<GenSymbol> letters_;
};

/// Free reduction of an arbitrary letter sequence; idempotent.
[[nodiscard]] Word reduce(std::span<const GenSymbol> letters);

/// Reduced product uv.
[[nodiscard]] Word concat(const Word& u, const Word& v);

/// Reversed word with all signs flipped; concat(w, invert_word(w)) is empty.
[[nodiscard]] Word invert_word(const Word& w);

/// Commutator [u,v] = u v u^-1 v^-1.
[[nodiscard]] Word commutator(const Word& u, const Word& v);

/// [y_i,x_i][y_{i+1},x_{i+1}]...[y_j,x_j]; requires 1 <= i <= j.
[[nodiscard]] Word partial_relator(int i, int j);

/// Boundary word [y_1,x_1]...[y_g,x_g]; requires g >= 1.
[[nodiscard]] Word relator(int g);

/// Text format: whitespace-separated `x<k>`, `y<k>`, `x<k>^-1`, `y<k>^-1`.
/// The empty word renders as `1`, and `1` parses back to it.
[[nodiscard]] std::string format_word(const Word& w);
[[nodiscard]] Word parse_word(std::string_view text);

[[nodiscard]] std::string format_gen(const GenSymbol& g);

}  // namespace mcgb
