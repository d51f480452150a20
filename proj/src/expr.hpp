#pragma once

#include <memory>
#include <variant>

#include "braid.hpp"
#include "braiding.hpp"

namespace mcgb {

/// Abstract syntax for mapping-class expressions. Juxtaposition is product
/// (leftmost factor acts first); `^n` binds tighter than juxtaposition.
class Expression;
using ExprPtr = std::shared_ptr<const Expression>;

class Expression {
 public:
  struct DehnAtom {
    McgGenerator::Name name;
    int index;
    friend bool operator==(const DehnAtom&, const DehnAtom&) = default;
  };
  struct BetaAtom {
    int i;
    friend bool operator==(const BetaAtom&, const BetaAtom&) = default;
  };
  struct BetaRsAtom {
    int r, s;
    friend bool operator==(const BetaRsAtom&, const BetaRsAtom&) = default;
  };
  /// Half twist along a handle span (p..q) or the boundary curve.
  struct TwistAtom {
    bool boundary;
    int p, q;  // ignored for boundary
    TwistDir dir;
    friend bool operator==(const TwistAtom&, const TwistAtom&) = default;
  };
  struct FullTwistAtom {
    int p, q;
    friend bool operator==(const FullTwistAtom&, const FullTwistAtom&) = default;
  };
  struct ArmsAtom {
    TwistDir dir;
    friend bool operator==(const ArmsAtom&, const ArmsAtom&) = default;
  };
  struct PhiAtom {
    BraidWord word;
    friend bool operator==(const PhiAtom&, const PhiAtom&) = default;
  };
  struct HarerAtom {
    BraidWord word;
    friend bool operator==(const HarerAtom&, const HarerAtom&) = default;
  };
  struct Product {
    std::vector<ExprPtr> factors;
  };
  struct Power {
    ExprPtr base;
    int exponent;  // nonzero
  };

  using Node = std::variant<DehnAtom, BetaAtom, BetaRsAtom, TwistAtom,
                            FullTwistAtom, ArmsAtom, PhiAtom, HarerAtom,
                            Product, Power>;

  explicit Expression(Node node) : node_(std::move(node)) {}
  [[nodiscard]] const Node& node() const { return node_; }

 private:
  Node node_;
};

[[nodiscard]] bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Grammaratoms: `a<k> b<k> w<k> beta(i) beta(r,s) hR hR' hA hA' h(Ri)
/// h'(Ri) h(R{i,j}) h'(R{i,j}) t(Ri) t(R{i,j}) phi(<braid>) harer(<braid>)`,
/// whitespace-insensitive, with `(...)^n` and `^-1`.
[[nodiscard]] ExprPtr parse_expression(std::string_view text);

[[nodiscard]] std::string format_expression(const ExprPtr& e);

/// Composes the atom classes in application order at the given genus.
[[nodiscard]] MappingClass evaluate(const ExprPtr& e, int genus);

}  // namespace mcgb
