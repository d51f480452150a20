#pragma once

#include "dehn.hpp"
#include "report.hpp"

namespace mcgb {

enum class TwistDir : std::uint8_t { Forward, Reverse };

/// Curves along which half Dehn twists are supported: the i-th handle curve
/// R_i, the two-handle curve R_{i,i+1}, and the boundary-parallel curve R.
struct HalfTwistName {
  enum class Curve : std::uint8_t { Handle, Pair, Boundary };
  Curve curve;
  int index = 0;  // meaningful for Handle and Pair

  [[nodiscard]] static HalfTwistName handle(int i) {
    return {Curve::Handle, i};
  }
  [[nodiscard]] static HalfTwistName pair(int i) { return {Curve::Pair, i}; }
  [[nodiscard]] static HalfTwistName boundary() { return {Curve::Boundary, 0}; }
};

/// Half Dehn twist along the curve enclosing handles p..q: the 180-degree
/// rotation of the enclosed subsurface. Forward direction squares to the
/// usual Dehn twist along that curve; Reverse is its inverse.
[[nodiscard]] MappingClass span_half_twist(int p, int q, TwistDir dir,
                                           int genus);

[[nodiscard]] MappingClass half_twist(const HalfTwistName& name, TwistDir dir,
                                      int genus);

/// h_{R_1} followed by h_{R_2} at genus 2 (the two-arm half twists).
[[nodiscard]] MappingClass arms_twist(TwistDir dir, int genus = 2);

/// The Dehn-twist word (a_i b_i a_i)^4 (a_{i+1} b_{i+1} (a_i b_i a_i)^-1 w_i
/// a_i b_i a_i^2 b_i)^-3 defining the local braiding.
[[nodiscard]] McgWord beta_word(int i);

/// Local braiding: x_i -> R_i x_{i+1} R_i^-1, y_i -> R_i y_{i+1} R_i^-1,
/// x_{i+1} -> x_i, y_{i+1} -> y_i with R_i = [y_i, x_i]. Construction
/// cross-checks the table against the evaluated Dehn-twist word.
[[nodiscard]] MappingClass beta_local(int i, int genus);

/// The same braiding assembled from half twists: reverse twist along
/// R_{i,i+1} applied first, then the twists along R_i and R_{i+1}.
[[nodiscard]] MappingClass beta_geometric(int i, int genus);

/// Block braiding as the product
/// (b_r...b_1)(b_{r+1}...b_2)...(b_{r+s-1}...b_s) of local braidings at
/// genus r+s, leftmost factor acting first.
[[nodiscard]] MappingClass beta_rs_product(int r, int s);

/// Block braiding by its direct action: x_k -> R_s x_{s+k} R_s^-1 and
/// y_k -> R_s y_{s+k} R_s^-1 for k <= r; x_{r+k} -> x_k, y_{r+k} -> y_k for
/// k <= s, with R_s the genus-s partial relator.
[[nodiscard]] MappingClass beta_rs_direct(int r, int s);

/// Square of the forward half twist; acts as conjugation by the enclosed
/// relator word. Valid for Handle and Pair curves.
[[nodiscard]] MappingClass full_twist(const HalfTwistName& name, int genus);

/// Compares beta_local(i, genus) against the six full twists t^{+-1} along
/// R_i, R_{i+1} and R_{i,i+1}; the braiding must differ from all of them.
/// Each comparison records the first differing generator in its params.
[[nodiscard]] Report is_geometric_image(int i, int genus);

}  // namespace mcgb
