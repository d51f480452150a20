#include <doctest.h>

#include "braiding.hpp"

using namespace mcgb;

namespace {
Word W(const char* text) { return parse_word(text); }
}

TEST_CASE("local braiding action table") {
  const MappingClass b = beta_local(1, 2);
  CHECK(b.endo().image(GenKind::X, 1) == W("y1 x1 y1^-1 x1^-1 x2 x1 y1 x1^-1 y1^-1"));
  CHECK(b.endo().image(GenKind::Y, 1) == W("y1 x1 y1^-1 x1^-1 y2 x1 y1 x1^-1 y1^-1"));
  CHECK(b.endo().image(GenKind::X, 2) == W("x1"));
  CHECK(b.endo().image(GenKind::Y, 2) == W("y1"));
  CHECK(beta_local(1, 3).endo().image(GenKind::X, 3) == W("x3"));
  CHECK(beta_local(2, 3).endo().image(GenKind::X, 1) == W("x1"));
  CHECK_THROWS_AS((void)beta_local(2, 2), InvalidIndexError);
  CHECK_THROWS_AS((void)beta_local(0, 2), InvalidIndexError);
}

TEST_CASE("local braiding equals its Dehn-twist word at several genera") {
  for (int g = 2; g <= 4; ++g)
    for (int i = 1; i <= g - 1; ++i)
      CHECK(endo_equal(evaluate_mcg_word(beta_word(i), g).endo(),
                       beta_local(i, g).endo()));
}

TEST_CASE("local braiding equals its half-twist composite") {
  for (int g = 2; g <= 4; ++g)
    for (int i = 1; i <= g - 1; ++i)
      CHECK(beta_geometric(i, g) == beta_local(i, g));
  CHECK(beta_geometric(2, 4) == beta_local(2, 4));
}

TEST_CASE("the reverse boundary twist produces the proof intermediates") {
  const MappingClass hrr = half_twist(HalfTwistName::boundary(),
                                      TwistDir::Reverse, 2);
  CHECK(apply(W("x2"), hrr.endo()) == W("y1 x1^-1 y1^-1"));
  CHECK(apply(W("y2"), hrr.endo()) == W("y1 x1 y1^-1 x1^-1 y1^-1"));
  CHECK(apply(W("x1"), hrr.endo()) ==
        concat(partial_relator(1, 1),
               concat(W("x2^-1"), invert_word(relator(2)))));
}

TEST_CASE("block braiding as a product of local braidings") {
  CHECK(beta_rs_product(1, 1) == beta_local(1, 2));
  CHECK(endo_equal(beta_rs_product(1, 2).endo(),
                   compose(beta_local(1, 3), beta_local(2, 3)).endo()));
  // (2,3): blocks (b2 b1)(b3 b2)(b4 b3) at genus 5
  MappingClass manual = identity_class(5);
  for (int idx : {2, 1, 3, 2, 4, 3}) manual = compose(manual, beta_local(idx, 5));
  CHECK(beta_rs_product(2, 3) == manual);
  CHECK_THROWS_AS((void)beta_rs_product(0, 1), InvalidRangeError);
  CHECK_THROWS_AS((void)beta_rs_product(1, 0), InvalidRangeError);
}

TEST_CASE("block braiding by direct action") {
  const MappingClass b = beta_rs_direct(2, 3);
  const Word r3 = partial_relator(1, 3);
  CHECK(b.endo().image(GenKind::X, 1) ==
        concat(r3, concat(W("x4"), invert_word(r3))));
  CHECK(b.endo().image(GenKind::X, 3) == W("x1"));
  CHECK(b.endo().image(GenKind::Y, 4) == W("y2"));
  CHECK(beta_rs_direct(1, 1).endo().image(GenKind::Y, 2) == W("y1"));
  CHECK_THROWS_AS((void)beta_rs_direct(1, 0), InvalidRangeError);
}

TEST_CASE("product and direct block braidings agree and fix the relator") {
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; r + s <= 5; ++s) {
      const MappingClass direct = beta_rs_direct(r, s);
      CHECK(beta_rs_product(r, s) == direct);
      const Word rel = relator(r + s);
      CHECK(apply(rel, direct.endo()) == rel);
    }
}

TEST_CASE("half twist tables at genus 2") {
  const Endo hr = half_twist(HalfTwistName::boundary(), TwistDir::Forward, 2).endo();
  CHECK(hr.image(GenKind::X, 1) == W("x2 y2 x2^-1 y2^-1 x2^-1"));  // R2^-1 x2^-1
  CHECK(hr.image(GenKind::Y, 1) == W("x2 y2^-1 x2^-1"));           // y2^-1 R2
  const Endo hrr = half_twist(HalfTwistName::boundary(), TwistDir::Reverse, 2).endo();
  CHECK(hrr.image(GenKind::X, 2) == W("y1 x1^-1 y1^-1"));
  CHECK(hrr.image(GenKind::Y, 2) == W("y1 x1 y1^-1 x1^-1 y1^-1"));  // R1 y1^-1

  const Endo h1 = half_twist(HalfTwistName::handle(1), TwistDir::Forward, 2).endo();
  CHECK(apply(W("y1"), h1) == W("x1 y1^-1 x1^-1"));  // y1^-1 R1 reduced
  CHECK(apply(W("x2"), h1) == W("x2"));
}

TEST_CASE("boundary half twist curve images") {
  const Endo hr = half_twist(HalfTwistName::boundary(), TwistDir::Forward, 2).endo();
  const Endo hrr = half_twist(HalfTwistName::boundary(), TwistDir::Reverse, 2).endo();
  const Word r1 = partial_relator(1, 1);
  const Word r2 = partial_relator(2, 2);
  const Word r = relator(2);
  CHECK(apply(r1, hr) == r2);
  CHECK(apply(r2, hr) == concat(invert_word(r2), r));
  CHECK(apply(r1, hrr) == concat(r, invert_word(r1)));
  CHECK(apply(r2, hrr) == r1);
  CHECK(verify_inverse(hr, hrr));
  // the squares (full boundary twists in either direction) invert each other
  CHECK(verify_inverse(compose(hr, hr), compose(hrr, hrr)));
}

TEST_CASE("arm twists match the combined two-handle table") {
  const MappingClass ha = arms_twist(TwistDir::Forward);
  // x_i -> R_i^-1 x_i^-1 = (x_i y_i) x_i^-1 (x_i y_i)^-1,
  // y_i -> y_i^-1 R_i = x_i y_i^-1 x_i^-1, for both handles
  CHECK(ha.endo().image(GenKind::X, 1) ==
        concat(W("x1 y1"), concat(W("x1^-1"), invert_word(W("x1 y1")))));
  CHECK(ha.endo().image(GenKind::Y, 1) == W("x1 y1^-1 x1^-1"));
  CHECK(ha.endo().image(GenKind::X, 2) ==
        concat(W("x2 y2"), concat(W("x2^-1"), invert_word(W("x2 y2")))));
  CHECK(ha.endo().image(GenKind::Y, 2) == W("x2 y2^-1 x2^-1"));

  const MappingClass har = arms_twist(TwistDir::Reverse);
  // x_i -> x_i^-1 R_i^-1 = y_i x_i^-1 y_i^-1, y_i -> R_i y_i^-1
  CHECK(har.endo().image(GenKind::X, 1) == W("y1 x1^-1 y1^-1"));
  CHECK(har.endo().image(GenKind::Y, 1) == W("y1 x1 y1^-1 x1^-1 y1^-1"));
  CHECK(har.endo().image(GenKind::X, 2) == W("y2 x2^-1 y2^-1"));
  CHECK(har.endo().image(GenKind::Y, 2) == W("y2 x2 y2^-1 x2^-1 y2^-1"));

  CHECK(compose(ha, har) == identity_class(2));
  CHECK_THROWS_AS((void)arms_twist(TwistDir::Forward, 3), InvalidGenusError);
}

TEST_CASE("half twists are certified for every catalog curve") {
  for (int g = 1; g <= 4; ++g) {
    std::vector<HalfTwistName> names;
    for (int i = 1; i <= g; ++i) names.push_back(HalfTwistName::handle(i));
    for (int i = 1; i <= g - 1; ++i) names.push_back(HalfTwistName::pair(i));
    names.push_back(HalfTwistName::boundary());
    for (const auto& name : names) {
      const MappingClass fwd = half_twist(name, TwistDir::Forward, g);
      const MappingClass rev = half_twist(name, TwistDir::Reverse, g);
      CHECK(verify_inverse(fwd.endo(), rev.endo()));
      CHECK(apply(relator(g), fwd.endo()) == relator(g));
    }
  }
  CHECK_THROWS_AS((void)half_twist(HalfTwistName::handle(3), TwistDir::Forward, 2),
                  InvalidIndexError);
  CHECK_THROWS_AS((void)half_twist(HalfTwistName::pair(2), TwistDir::Forward, 2),
                  InvalidIndexError);
}

TEST_CASE("half twist squares to the Dehn twist along its curve") {
  for (int g = 2; g <= 3; ++g)
    for (int p = 1; p <= g; ++p)
      for (int q = p; q <= g; ++q) {
        const MappingClass h = span_half_twist(p, q, TwistDir::Forward, g);
        const Endo square = compose(h, h).endo();
        const Word c = partial_relator(p, q);
        for (int k = 1; k <= g; ++k) {
          const Word xk = Word::generator(GenKind::X, k);
          const Word expect =
              (k >= p && k <= q)
                  ? concat(invert_word(c), concat(xk, c))
                  : xk;
          CHECK(apply(xk, square) == expect);
        }
      }
}

TEST_CASE("the boundary rotation conjugates the handle twists") {
  const Endo hr = half_twist(HalfTwistName::boundary(), TwistDir::Forward, 2).endo();
  const Endo hrr = half_twist(HalfTwistName::boundary(), TwistDir::Reverse, 2).endo();
  const Endo h1 = half_twist(HalfTwistName::handle(1), TwistDir::Forward, 2).endo();
  const Endo h2 = half_twist(HalfTwistName::handle(2), TwistDir::Forward, 2).endo();

  // disjoint handles commute
  CHECK(endo_equal(compose(h1, h2), compose(h2, h1)));
  // the rotation swaps them by conjugation, so the individual pairs do not
  // commute but the product does
  CHECK(endo_equal(compose(hrr, compose(h1, hr)), h2));
  CHECK(endo_equal(compose(hrr, compose(h2, hr)), h1));
  CHECK(!endo_equal(compose(h1, hr), compose(hr, h1)));
  CHECK(!endo_equal(compose(h2, hr), compose(hr, h2)));
  const Endo arms = compose(h1, h2);
  CHECK(endo_equal(compose(arms, hr), compose(hr, arms)));
}

TEST_CASE("full twists") {
  const MappingClass t1 = full_twist(HalfTwistName::handle(1), 2);
  const Word r1 = partial_relator(1, 1);
  CHECK(t1.endo().image(GenKind::X, 1) ==
        concat(invert_word(r1), concat(W("x1"), r1)));
  CHECK(t1.endo().image(GenKind::X, 2) == W("x2"));
  const MappingClass tp = full_twist(HalfTwistName::pair(1), 2);
  CHECK(apply(relator(2), tp.endo()) == relator(2));
  CHECK_THROWS_AS((void)full_twist(HalfTwistName::boundary(), 2),
                  InvalidIndexError);
}

TEST_CASE("the braiding is not a twist along any pants curve") {
  const Report r = is_geometric_image(1, 2);
  CHECK(r.total() == 7);  // six comparisons plus the verdict
  CHECK(r.all_passed());
  for (const auto& c : r.checks) CHECK(!c.witness);

  // spot check: the braiding moves x2, the handle twist does not
  const MappingClass beta = beta_local(1, 2);
  const MappingClass t1 = full_twist(HalfTwistName::handle(1), 2);
  CHECK(apply(W("x2"), beta.endo()) == W("x1"));
  CHECK(apply(W("x2"), t1.endo()) == W("x2"));
  CHECK(!endo_equal(beta.endo(), t1.endo()));
  CHECK(!endo_equal(beta.endo(), full_twist(HalfTwistName::pair(1), 2)
                                     .inverse().endo()));

  const Report r3 = is_geometric_image(2, 3);
  CHECK(r3.all_passed());
  CHECK_THROWS_AS((void)is_geometric_image(2, 2), InvalidIndexError);
}

TEST_CASE("beta words stay reduced") {
  const McgWord w = beta_word(1);
  CHECK(w.letters().size() == 45);
  for (std::size_t i = 0; i + 1 < w.letters().size(); ++i)
    CHECK(!w.letters()[i].cancels(w.letters()[i + 1]));
}
