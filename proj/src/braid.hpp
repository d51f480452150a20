#pragma once

#include "braiding.hpp"
#include "report.hpp"

namespace mcgb {

struct BraidLetter {
  std::int32_t index;  // >= 1
  std::int8_t sign;    // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
  [[nodiscard]] BraidLetter inverse() const {
    return {index, static_cast<std::int8_t>(-sign)};
  }
  [[nodiscard]] bool cancels(const BraidLetter& o) const {
    return index == o.index && sign == -o.sign;
  }
};

/// Freely reduced word in the generators s_1..s_{n-1} of the braid group on
/// n strands.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::span<const BraidLetter> letters);

  void push(const BraidLetter& l);
  void append(const BraidWord& other);
  void append_power(const BraidWord& other, int n);

  [[nodiscard]] int strands() const { return strands_; }
  [[nodiscard]] const std::vector<BraidLetter>& letters() const {
    return letters_;
  }
  [[nodiscard]] BraidWord inverse() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

/// The block crossing of the front r strands past the rear s strands:
/// (s_r...s_1)(s_{r+1}...s_2)...(s_{r+s-1}...s_s) on r+s strands.
[[nodiscard]] BraidWord sigma_rs(int r, int s);

/// Automorphism of the rank-n free group on x_1..x_n.
class FreeAut {
 public:
  explicit FreeAut(int rank);  // identity
  FreeAut(int rank, std::vector<Word> images);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const std::vector<Word>& images() const { return images_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Word apply_to(const Word& w) const;

  friend bool operator==(const FreeAut&, const FreeAut&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

[[nodiscard]] FreeAut compose(const FreeAut& f, const FreeAut& h);

/// The braid group action on the free group: s_i sends x_i to
/// x_i x_{i+1} x_i^-1 and x_{i+1} to x_i. Faithful, so a word with
/// non-identity image is a non-trivial braid.
[[nodiscard]] FreeAut artin(const BraidWord& b);

/// s_i -> beta(i): left-to-right composition of local braidings at the
/// given genus. Requires strands <= genus.
[[nodiscard]] MappingClass phi(const BraidWord& b, int genus);

/// s_i -> b_{(i+1)/2} for odd i, w_{i/2} for even i.
[[nodiscard]] MappingClass harer(const BraidWord& b, int genus);

/// Enumerates every freely reduced braid word of length <= max_len on
/// `strands` strands; each word with non-identity Artin image must have
/// non-identity image under phi at genus = strands.
[[nodiscard]] Report injectivity_smoke(int strands, int max_len);

/// Text format: tokens `s<k>` with optional `^-1` or integer power, plus
/// parenthesised groups and `sigma(r,s)`. The strand count is the smallest
/// one supporting every letter, but at least min_strands.
[[nodiscard]] BraidWord parse_braid_word(std::string_view text,
                                         int min_strands = 1);
[[nodiscard]] std::string format_braid_word(const BraidWord& b);

}  // namespace mcgb
