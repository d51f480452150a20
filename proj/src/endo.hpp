#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "word.hpp"

namespace mcgb {

/// Endomorphism of the rank-2g free group, stored as the 2g generator
/// images in the order x_1, y_1, ..., x_g, y_g. Values are immutable.
class Endo {
 public:
  Endo(int genus, std::vector<Word> images);

  [[nodiscard]] static Endo identity(int genus);

  [[nodiscard]] int genus() const { return genus_; }
  [[nodiscard]] const Word& image(GenKind kind, int index) const;
  [[nodiscard]] const std::vector<Word>& images() const { return images_; }

  friend bool operator==(const Endo&, const Endo&) = default;

 private:
  int genus_;
  std::vector<Word> images_;
};

[[nodiscard]] inline std::size_t slot(GenKind kind, int index) {
  return 2 * static_cast<std::size_t>(index - 1) + (kind == GenKind::Y ? 1 : 0);
}

/// Substitute each letter of w by its image under f (inverting images for
/// negative letters) and reduce. Throws RankMismatchError if w mentions a
/// handle index above f's genus.
[[nodiscard]] Word apply(const Word& w, const Endo& f);

/// The endomorphism acting as `f first, then h`: apply(w, compose(f, h)) ==
/// apply(apply(w, f), h). Products throughout the library are read
/// left-to-right as order of application.
[[nodiscard]] Endo compose(const Endo& f, const Endo& h);

[[nodiscard]] bool endo_equal(const Endo& f, const Endo& h);

/// Block sum: acts as f on handles 1..g and as h shifted by +g on handles
/// g+1..g+k. This is the monoidal product on automorphisms.
[[nodiscard]] Endo free_product(const Endo& f, const Endo& h);

/// True iff compose(f,h) and compose(h,f) are both the identity.
[[nodiscard]] bool verify_inverse(const Endo& f, const Endo& h);

[[nodiscard]] Word shift_word(const Word& w, int offset);

/// An automorphism of the surface group certified at construction: it fixes
/// the boundary relator and carries an explicit verified inverse.
class MappingClass {
 public:
  MappingClass(Endo forward, Endo backward);

  [[nodiscard]] int genus() const { return forward_.genus(); }
  [[nodiscard]] const Endo& endo() const { return forward_; }
  [[nodiscard]] const Endo& inverse_endo() const { return backward_; }
  [[nodiscard]] MappingClass inverse() const;

  [[nodiscard]] Word apply_to(const Word& w) const {
    return apply(w, forward_);
  }

  friend bool operator==(const MappingClass& a, const MappingClass& b) {
    return endo_equal(a.forward_, b.forward_);
  }

 private:
  Endo forward_;
  Endo backward_;
};

[[nodiscard]] MappingClass compose(const MappingClass& f,
                                   const MappingClass& h);
[[nodiscard]] MappingClass free_product(const MappingClass& f,
                                        const MappingClass& h);
[[nodiscard]] MappingClass identity_class(int genus);

/// First generator on which f and h disagree, as "<gen>: <lhs> vs <rhs>".
[[nodiscard]] std::optional<std::string> first_difference(const Endo& f,
                                                          const Endo& h);

/// Fixture format: line `genus <g>` followed by 2g lines `x<k> -> <word>` /
/// `y<k> -> <word>` in the word text format.
[[nodiscard]] std::string format_endo(const Endo& f);
[[nodiscard]] Endo parse_endo(std::string_view text);

}  // namespace mcgb
