#include "verify.hpp"

#include <algorithm>
#include <random>

namespace mcgb {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

CheckResult equal_check(std::string name, Params params, std::string claim,
                        const Endo& lhs, const Endo& rhs) {
  CheckResult c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.claim = std::move(claim);
  auto diff = first_difference(lhs, rhs);
  c.passed = !diff;
  if (diff) c.witness = *diff;
  return c;
}

CheckResult bool_check(std::string name, Params params, std::string claim,
                       bool passed, std::string witness_on_fail) {
  CheckResult c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.claim = std::move(claim);
  c.passed = passed;
  if (!passed) c.witness = std::move(witness_on_fail);
  return c;
}

std::string itos(int v) { return std::to_string(v); }

// Deterministic generator for the randomized algebra-law checks.
struct Sampler {
  std::mt19937_64 rng;

  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }

  // Raw letter sequence, cancellations encouraged so that reduction has
  // something to do.
  std::vector<GenSymbol> raw_letters(int genus, int max_len) {
    std::vector<GenSymbol> out;
    const int len = pick(0, max_len);
    for (int k = 0; k < len; ++k) {
      GenSymbol g{pick(0, 1) ? GenKind::X : GenKind::Y, pick(1, genus),
                  static_cast<std::int8_t>(pick(0, 1) ? 1 : -1)};
      out.push_back(g);
      if (pick(0, 3) == 0) out.push_back(g.inverse());
    }
    return out;
  }

  Word word(int genus, int max_len) {
    auto raw = raw_letters(genus, max_len);
    return Word(std::span<const GenSymbol>(raw.data(), raw.size()));
  }

  McgWord mcg_word(int genus, int max_len) {
    McgWord out;
    const int len = pick(0, max_len);
    for (int k = 0; k < len; ++k) {
      const int which = pick(0, genus > 1 ? 2 : 1);
      McgGenerator::Name name = which == 0   ? McgGenerator::Name::A
                                : which == 1 ? McgGenerator::Name::B
                                             : McgGenerator::Name::W;
      const int max_index = name == McgGenerator::Name::W ? genus - 1 : genus;
      out.push(McgGenerator{name, pick(1, max_index),
                            static_cast<std::int8_t>(pick(0, 1) ? 1 : -1)});
    }
    return out;
  }
};

std::vector<std::pair<std::string, MappingClass>> naturality_samples(int genus) {
  std::vector<std::pair<std::string, MappingClass>> out;
  out.emplace_back("1", identity_class(genus));
  out.emplace_back("a1", dehn_a(1, genus));
  out.emplace_back("b1", dehn_b(1, genus));
  if (genus >= 2) {
    out.emplace_back("w1", dehn_w(1, genus));
    out.emplace_back("beta(1)", beta_local(1, genus));
  }
  return out;
}

// Test-only corrupted variant of the genus-2 local braiding: the x_1 image
// loses its conjugators. Not relator-preserving, deliberately.
Endo corrupted_beta_table() {
  auto images = Endo::identity(2).images();
  const Word r1 = commutator(Word::generator(GenKind::Y, 1),
                             Word::generator(GenKind::X, 1));
  images[slot(GenKind::X, 1)] = Word::generator(GenKind::X, 2);
  images[slot(GenKind::Y, 1)] =
      concat(r1, concat(Word::generator(GenKind::Y, 2), invert_word(r1)));
  images[slot(GenKind::X, 2)] = Word::generator(GenKind::X, 1);
  images[slot(GenKind::Y, 2)] = Word::generator(GenKind::Y, 1);
  return Endo(2, std::move(images));
}

}  // namespace

CheckResult check_unit_axiom(int r) {
  CheckResult c;
  c.name = "axiom/unit";
  c.params = {{"r", itos(r)}};
  c.claim = "beta(r,0) = beta(0,r) = identity at genus r";
  if (r < 0) throw InvalidRangeError("unit axiom needs r >= 0");
  if (r == 0) {
    // Both factors empty: identity of the empty surface, nothing to compare.
    c.passed = true;
    c.params.emplace_back("note", "vacuous at genus 0");
    return c;
  }
  // An empty factor contributes no local braidings, so both one-sided
  // braidings are empty products at genus r.
  const Endo id = Endo::identity(r);
  const Endo left = identity_class(r).endo();
  const Endo right = identity_class(r).endo();
  c.passed = endo_equal(left, id) && endo_equal(right, id);
  if (!c.passed) c.witness = "empty-factor braiding differs from identity";
  return c;
}

CheckResult check_hexagon_b(int r, int s, int t) {
  if (r < 1 || s < 1 || t < 1)
    throw InvalidRangeError("hexagon check needs r, s, t >= 1");
  const MappingClass composite =
      compose(free_product(identity_class(r), beta_rs_direct(s, t)),
              free_product(beta_rs_direct(r, t), identity_class(s)));
  return equal_check(
      "axiom/hexagon-b", {{"r", itos(r)}, {"s", itos(s)}, {"t", itos(t)}},
      "beta(r+s,t) = (1_r x beta(s,t)) then (beta(r,t) x 1_s)",
      beta_rs_direct(r + s, t).endo(), composite.endo());
}

CheckResult check_hexagon_c(int r, int s, int t) {
  if (r < 1 || s < 1 || t < 1)
    throw InvalidRangeError("hexagon check needs r, s, t >= 1");
  const MappingClass composite =
      compose(free_product(beta_rs_direct(r, s), identity_class(t)),
              free_product(identity_class(s), beta_rs_direct(r, t)));
  return equal_check(
      "axiom/hexagon-c", {{"r", itos(r)}, {"s", itos(s)}, {"t", itos(t)}},
      "beta(r,s+t) = (beta(r,s) x 1_t) then (1_s x beta(r,t))",
      beta_rs_direct(r, s + t).endo(), composite.endo());
}

CheckResult check_yang_baxter(int r, int s, int t) {
  if (r < 1 || s < 1 || t < 1)
    throw InvalidRangeError("Yang-Baxter check needs r, s, t >= 1");
  const MappingClass lhs =
      compose(compose(free_product(identity_class(r), beta_rs_direct(s, t)),
                      free_product(beta_rs_direct(r, t), identity_class(s))),
              free_product(identity_class(t), beta_rs_direct(r, s)));
  const MappingClass rhs =
      compose(compose(free_product(beta_rs_direct(r, s), identity_class(t)),
                      free_product(identity_class(s), beta_rs_direct(r, t))),
              free_product(beta_rs_direct(s, t), identity_class(r)));
  return equal_check(
      "axiom/yang-baxter", {{"r", itos(r)}, {"s", itos(s)}, {"t", itos(t)}},
      "(1_r x b_st)(b_rt x 1_s)(1_t x b_rs) = (b_rs x 1_t)(1_s x b_rt)(b_st x 1_r)",
      lhs.endo(), rhs.endo());
}

CheckResult check_naturality(int r, int s, const MappingClass& f,
                             const MappingClass& h, const std::string& f_label,
                             const std::string& h_label) {
  if (f.genus() != r || h.genus() != s)
    throw RankMismatchError("naturality sample genera do not match (r, s)");
  const MappingClass beta = beta_rs_direct(r, s);
  return equal_check(
      "natural/braiding",
      {{"r", itos(r)}, {"s", itos(s)}, {"f", f_label}, {"h", h_label}},
      "(f x h) then beta(r,s) = beta(r,s) then (h x f)",
      compose(free_product(f, h), beta).endo(),
      compose(beta, free_product(h, f)).endo());
}

Report run_suite(const SuiteConfig& config) {
  Report report;
  report.suite = "verify";
  report.header = {{"max-genus", itos(config.max_genus)},
                   {"max-rs", itos(config.max_rs)},
                   {"max-rst", itos(config.max_rst)},
                   {"max-naturality", itos(config.max_naturality)},
                   {"max-strands", itos(config.max_strands)},
                   {"max-braid-len", itos(config.max_braid_len)},
                   {"seed", std::to_string(config.seed)},
                   {"fault-injection", config.inject_fault ? "on" : "off"}};

  Sampler sampler(config.seed);
  const int samples = std::max(1, config.random_words);

  // -- word laws --------------------------------------------------------
  {
    bool ok = true;
    std::string witness;
    for (int k = 0; k < samples && ok; ++k) {
      auto raw = sampler.raw_letters(3, 14);
      const Word once(std::span<const GenSymbol>(raw.data(), raw.size()));
      const Word twice(
          std::span<const GenSymbol>(once.letters().data(), once.size()));
      if (once != twice) {
        ok = false;
        witness = format_word(once) + " reduces again to " + format_word(twice);
      }
    }
    report.add(bool_check("word/reduce-idempotent", {{"samples", itos(samples)}},
                          "reduce(reduce(w)) = reduce(w)", ok, witness));
  }
  {
    bool ok = true;
    std::string witness;
    for (int k = 0; k < samples && ok; ++k) {
      const Word u = sampler.word(3, 10);
      const Word v = sampler.word(3, 10);
      const Word w = sampler.word(3, 10);
      if (concat(concat(u, v), w) != concat(u, concat(v, w))) {
        ok = false;
        witness = format_word(u) + " , " + format_word(v) + " , " + format_word(w);
      }
      if (concat(u, Word()) != u || concat(Word(), u) != u) {
        ok = false;
        witness = "unit law at " + format_word(u);
      }
    }
    report.add(bool_check("word/concat-monoid", {{"samples", itos(samples)}},
                          "(uv)w = u(vw) and 1w = w1 = w", ok, witness));
  }
  {
    bool ok = true;
    std::string witness;
    for (int k = 0; k < samples && ok; ++k) {
      const Word u = sampler.word(3, 10);
      if (invert_word(invert_word(u)) != u || !concat(u, invert_word(u)).empty()) {
        ok = false;
        witness = format_word(u);
      }
    }
    report.add(bool_check("word/inverse", {{"samples", itos(samples)}},
                          "inverse is an involution and w w^-1 = 1", ok, witness));
  }

  // -- endomorphism laws -------------------------------------------------
  {
    const int g = 3;
    std::vector<Endo> pool;
    for (int i = 1; i <= g; ++i) {
      pool.push_back(dehn_a(i, g).endo());
      pool.push_back(dehn_b(i, g).endo());
    }
    for (int i = 1; i <= g - 1; ++i) pool.push_back(dehn_w(i, g).endo());

    bool hom_ok = true;
    std::string hom_witness;
    for (int k = 0; k < samples && hom_ok; ++k) {
      const Endo& f = pool[static_cast<std::size_t>(
          sampler.pick(0, static_cast<int>(pool.size()) - 1))];
      const Word u = sampler.word(g, 8);
      const Word v = sampler.word(g, 8);
      if (apply(concat(u, v), f) != concat(apply(u, f), apply(v, f)) ||
          apply(invert_word(u), f) != invert_word(apply(u, f))) {
        hom_ok = false;
        hom_witness = format_word(u) + " , " + format_word(v);
      }
    }
    report.add(bool_check("endo/apply-homomorphism", {{"genus", itos(g)}},
                          "f(uv) = f(u)f(v) and f(u^-1) = f(u)^-1", hom_ok,
                          hom_witness));

    bool assoc_ok = true;
    std::string assoc_witness;
    for (int k = 0; k < samples && assoc_ok; ++k) {
      const auto pick_endo = [&]() -> const Endo& {
        return pool[static_cast<std::size_t>(
            sampler.pick(0, static_cast<int>(pool.size()) - 1))];
      };
      const Endo &f = pick_endo(), &h = pick_endo(), &k2 = pick_endo();
      if (!endo_equal(compose(compose(f, h), k2), compose(f, compose(h, k2)))) {
        assoc_ok = false;
        assoc_witness = "catalog triple";
      }
    }
    report.add(bool_check("endo/compose-associative", {{"genus", itos(g)}},
                          "(f h) k = f (h k)", assoc_ok, assoc_witness));

    bool fp_ok = true;
    for (int k = 0; k < samples && fp_ok; ++k) {
      const auto pick_endo = [&]() -> const Endo& {
        return pool[static_cast<std::size_t>(
            sampler.pick(0, static_cast<int>(pool.size()) - 1))];
      };
      const Endo &f = pick_endo(), &f2 = pick_endo();
      const Endo &h = pick_endo(), &h2 = pick_endo();
      if (!endo_equal(free_product(compose(f, f2), compose(h, h2)),
                      compose(free_product(f, h), free_product(f2, h2))))
        fp_ok = false;
    }
    report.add(bool_check("endo/free-product-functorial", {{"genus", itos(g)}},
                          "(f f') x (h h') = (f x h)(f' x h')", fp_ok,
                          "free product does not respect composition"));
  }

  // -- twist catalog ------------------------------------------------------
  for (int g = 1; g <= config.max_genus; ++g) {
    bool ok = true;
    std::string witness;
    const Word r = relator(g);
    const auto probe = [&](const MappingClass& mc, const std::string& label) {
      if (apply(r, mc.endo()) != r || !verify_inverse(mc.endo(), mc.inverse_endo())) {
        ok = false;
        witness = label;
      }
    };
    for (int i = 1; i <= g; ++i) {
      probe(dehn_a(i, g), "a" + itos(i));
      probe(dehn_b(i, g), "b" + itos(i));
    }
    for (int i = 1; i <= g - 1; ++i) probe(dehn_w(i, g), "w" + itos(i));
    report.add(bool_check(
        "catalog/certified", {{"genus", itos(g)}},
        "every a_i, b_i, w_i fixes the boundary relator and has a verified inverse",
        ok, witness));
  }
  for (int g = 1; g <= std::min(config.max_genus, 5); ++g)
    for (int i = 1; i <= g; ++i)
      report.add(equal_check(
          "catalog/chain-relation", {{"genus", itos(g)}, {"i", itos(i)}},
          "a_i b_i a_i = b_i a_i b_i",
          compose(dehn_a(i, g), compose(dehn_b(i, g), dehn_a(i, g))).endo(),
          compose(dehn_b(i, g), compose(dehn_a(i, g), dehn_b(i, g))).endo()));
  {
    bool ok = true;
    std::string witness;
    for (int k = 0; k < samples && ok; ++k) {
      const int g = sampler.pick(2, 3);
      const McgWord u = sampler.mcg_word(g, 5);
      const McgWord v = sampler.mcg_word(g, 5);
      McgWord uv = u;
      uv.append(v);
      if (!endo_equal(evaluate_mcg_word(uv, g).endo(),
                      compose(evaluate_mcg_word(u, g),
                              evaluate_mcg_word(v, g)).endo())) {
        ok = false;
        witness = format_mcg_word(u) + " . " + format_mcg_word(v);
      }
    }
    report.add(bool_check("catalog/evaluate-homomorphism",
                          {{"samples", itos(samples)}},
                          "evaluate(uv) = evaluate(u) then evaluate(v)", ok,
                          witness));
  }

  // -- local braidings ----------------------------------------------------
  for (int g = 2; g <= config.max_genus; ++g) {
    for (int i = 1; i <= g - 1; ++i) {
      const Endo table = (config.inject_fault && i == 1 && g == 2)
                             ? corrupted_beta_table()
                             : beta_local(i, g).endo();
      const Endo from_word = evaluate_mcg_word(beta_word(i), g).endo();
      const Endo geometric = beta_geometric(i, g).endo();
      CheckResult c;
      c.name = "braiding/three-way";
      c.params = {{"genus", itos(g)}, {"i", itos(i)}};
      c.claim =
          "Dehn-twist word = action table = half-twist composite for beta(i)";
      auto d1 = first_difference(from_word, table);
      auto d2 = first_difference(table, geometric);
      c.passed = !d1 && !d2;
      if (!c.passed) c.witness = d1 ? ("word vs table: " + *d1)
                                    : ("table vs geometric: " + *d2);
      report.add(std::move(c));
    }
    for (int i = 1; i + 1 <= g - 1; ++i)
      report.add(equal_check(
          "braiding/braid-relation", {{"genus", itos(g)}, {"i", itos(i)}},
          "beta(i) beta(i+1) beta(i) = beta(i+1) beta(i) beta(i+1)",
          compose(beta_local(i, g),
                  compose(beta_local(i + 1, g), beta_local(i, g))).endo(),
          compose(beta_local(i + 1, g),
                  compose(beta_local(i, g), beta_local(i + 1, g))).endo()));
    for (int i = 1; i <= g - 1; ++i)
      for (int j = i + 2; j <= g - 1; ++j)
        report.add(equal_check(
            "braiding/distant-commute",
            {{"genus", itos(g)}, {"i", itos(i)}, {"j", itos(j)}},
            "beta(i) beta(j) = beta(j) beta(i) for |i-j| >= 2",
            compose(beta_local(i, g), beta_local(j, g)).endo(),
            compose(beta_local(j, g), beta_local(i, g)).endo()));
  }

  // -- block braidings ----------------------------------------------------
  for (int r = 1; r <= config.max_rs - 1; ++r) {
    for (int s = 1; r + s <= config.max_rs; ++s) {
      const MappingClass direct = beta_rs_direct(r, s);
      report.add(equal_check("braiding/rs-agreement",
                             {{"r", itos(r)}, {"s", itos(s)}},
                             "product of local braidings = direct action table",
                             beta_rs_product(r, s).endo(), direct.endo()));
      const Word rel = relator(r + s);
      report.add(bool_check("braiding/rs-fixes-relator",
                            {{"r", itos(r)}, {"s", itos(s)}},
                            "beta(r,s) fixes the boundary relator",
                            apply(rel, direct.endo()) == rel,
                            format_word(apply(rel, direct.endo()))));
      report.add(equal_check("braid/phi-preserves-braiding",
                             {{"r", itos(r)}, {"s", itos(s)}},
                             "phi(sigma(r,s)) = beta(r,s)",
                             phi(sigma_rs(r, s), r + s).endo(), direct.endo()));
    }
  }

  // -- half twists ---------------------------------------------------------
  for (int g = 1; g <= config.max_genus; ++g) {
    bool ok = true;
    std::string witness;
    const auto probe = [&](const HalfTwistName& name, const std::string& label) {
      const MappingClass fwd = half_twist(name, TwistDir::Forward, g);
      const MappingClass rev = half_twist(name, TwistDir::Reverse, g);
      if (!verify_inverse(fwd.endo(), rev.endo())) {
        ok = false;
        witness = label;
      }
    };
    for (int i = 1; i <= g; ++i) probe(HalfTwistName::handle(i), "h(R" + itos(i) + ")");
    for (int i = 1; i <= g - 1; ++i)
      probe(HalfTwistName::pair(i), "h(R{" + itos(i) + "," + itos(i + 1) + "})");
    probe(HalfTwistName::boundary(), "hR");
    report.add(bool_check("halftwist/inverse-pairing", {{"genus", itos(g)}},
                          "forward and reverse half twists are mutual inverses",
                          ok, witness));
  }
  for (int g = 2; g <= std::min(config.max_genus, 4); ++g) {
    bool ok = true;
    std::string witness;
    for (int p = 1; p <= g && ok; ++p) {
      for (int q = p; q <= g && ok; ++q) {
        const MappingClass h = span_half_twist(p, q, TwistDir::Forward, g);
        const Endo square = compose(h, h).endo();
        const Word c = partial_relator(p, q);
        auto conj = Endo::identity(g).images();
        for (int k = p; k <= q; ++k) {
          conj[slot(GenKind::X, k)] = concat(
              invert_word(c), concat(Word::generator(GenKind::X, k), c));
          conj[slot(GenKind::Y, k)] = concat(
              invert_word(c), concat(Word::generator(GenKind::Y, k), c));
        }
        if (!endo_equal(square, Endo(g, std::move(conj)))) {
          ok = false;
          witness = "span [" + itos(p) + "," + itos(q) + "]";
        }
      }
    }
    report.add(bool_check(
        "halftwist/square-is-dehn-twist", {{"genus", itos(g)}},
        "h_C^2 conjugates the enclosed handles by the curve word C", ok,
        witness));
  }
  {
    // Curve images of the boundary half twists at genus 2.
    const int g = 2;
    const Word r1 = partial_relator(1, 1);
    const Word r2 = partial_relator(2, 2);
    const Word r = relator(g);
    const Endo hr = half_twist(HalfTwistName::boundary(), TwistDir::Forward, g).endo();
    const Endo hrr = half_twist(HalfTwistName::boundary(), TwistDir::Reverse, g).endo();
    report.add(bool_check(
        "halftwist/boundary-curve-images", {{"genus", itos(g)}, {"dir", "forward"}},
        "hR sends R1 to R2 and R2 to R2^-1 R",
        apply(r1, hr) == r2 && apply(r2, hr) == concat(invert_word(r2), r),
        "R1 -> " + format_word(apply(r1, hr)) + ", R2 -> " +
            format_word(apply(r2, hr))));
    report.add(bool_check(
        "halftwist/boundary-curve-images", {{"genus", itos(g)}, {"dir", "reverse"}},
        "hR' sends R1 to R R1^-1 and R2 to R1",
        apply(r1, hrr) == concat(r, invert_word(r1)) && apply(r2, hrr) == r1,
        "R1 -> " + format_word(apply(r1, hrr)) + ", R2 -> " +
            format_word(apply(r2, hrr))));
    report.add(bool_check(
        "halftwist/boundary-inverse", {{"genus", itos(g)}},
        "hR followed by hR' is the identity", verify_inverse(hr, hrr),
        "hR and hR' fail to invert each other"));

    const Endo h1 = span_half_twist(1, 1, TwistDir::Forward, g).endo();
    const Endo h2 = span_half_twist(2, 2, TwistDir::Forward, g).endo();
    report.add(equal_check("halftwist/handles-commute", {{"genus", itos(g)}},
                           "h(R1) and h(R2) commute (disjoint supports)",
                           compose(h1, h2), compose(h2, h1)));
    report.add(equal_check(
        "halftwist/arms-commute-with-boundary", {{"genus", itos(g)}},
        "the two-arm twist h(R1) h(R2) commutes with hR",
        compose(compose(h1, h2), hr), compose(hr, compose(h1, h2))));
    report.add(equal_check(
        "halftwist/rotation-conjugates-handles", {{"genus", itos(g)}},
        "hR' then h(R1) then hR equals h(R2): the boundary rotation swaps the "
        "two handle twists",
        compose(hrr, compose(h1, hr)), h2));
  }

  // -- the genus-2 composite ------------------------------------------------
  {
    const int g = 2;
    const MappingClass hrr = half_twist(HalfTwistName::boundary(), TwistDir::Reverse, g);
    const MappingClass ha = arms_twist(TwistDir::Forward, g);
    const Endo table = config.inject_fault ? corrupted_beta_table()
                                           : beta_local(1, g).endo();
    report.add(equal_check(
        "braiding/boundary-arms-composite", {{"genus", itos(g)}},
        "hR' then hA equals beta(1,1)", compose(hrr, ha).endo(), table));
    const Word x2 = Word::generator(GenKind::X, 2);
    const Word y2 = Word::generator(GenKind::Y, 2);
    const Word expected_x2 = parse_word("y1 x1^-1 y1^-1");
    const Word expected_y2 = parse_word("y1 x1 y1^-1 x1^-1 y1^-1");
    report.add(bool_check(
        "braiding/boundary-arms-chain", {{"genus", itos(g)}},
        "under hR' alone: x2 -> y1 x1^-1 y1^-1 and y2 -> R1 y1^-1",
        apply(x2, hrr.endo()) == expected_x2 && apply(y2, hrr.endo()) == expected_y2,
        "x2 -> " + format_word(apply(x2, hrr.endo())) + ", y2 -> " +
            format_word(apply(y2, hrr.endo()))));
  }

  // -- nongeometricity -------------------------------------------------------
  report.merge(is_geometric_image(1, 2));
  if (config.max_genus >= 3) {
    report.merge(is_geometric_image(1, 3));
    report.merge(is_geometric_image(2, 3));
  }

  // -- braided monoidal axioms ----------------------------------------------
  for (int r = 0; r <= config.max_rs; ++r) report.add(check_unit_axiom(r));
  struct TripleOutcome {
    bool b, c, yb;
  };
  std::vector<TripleOutcome> outcomes;
  for (int r = 1; r <= config.max_rst - 2; ++r)
    for (int s = 1; r + s <= config.max_rst - 1; ++s)
      for (int t = 1; r + s + t <= config.max_rst; ++t) {
        CheckResult b = check_hexagon_b(r, s, t);
        CheckResult c = check_hexagon_c(r, s, t);
        CheckResult yb = check_yang_baxter(r, s, t);
        outcomes.push_back({b.passed, c.passed, yb.passed});
        report.add(std::move(b));
        report.add(std::move(c));
        report.add(std::move(yb));
      }
  {
    bool ok = true;
    for (const auto& o : outcomes)
      if (o.b && o.c && !o.yb) ok = false;
    report.add(bool_check(
        "axiom/meta-hexagons-imply-yang-baxter",
        {{"triples", itos(static_cast<int>(outcomes.size()))}},
        "on every tested triple, hexagons (b) and (c) passing forces "
        "Yang-Baxter to pass",
        ok, "a triple passed both hexagons but failed Yang-Baxter"));
  }

  // -- naturality --------------------------------------------------------
  for (int r = 1; r <= config.max_naturality - 1; ++r)
    for (int s = 1; r + s <= config.max_naturality; ++s)
      for (const auto& [f_label, f] : naturality_samples(r))
        for (const auto& [h_label, h] : naturality_samples(s))
          report.add(check_naturality(r, s, f, h, f_label, h_label));

  // -- braid group -----------------------------------------------------------
  for (int n = 3; n <= 6; ++n) {
    bool ok = true;
    std::string witness;
    for (int i = 1; i + 1 <= n - 1 && ok; ++i) {
      BraidWord lhs(n), rhs(n);
      lhs.push({i, 1});
      lhs.push({i + 1, 1});
      lhs.push({i, 1});
      rhs.push({i + 1, 1});
      rhs.push({i, 1});
      rhs.push({i + 1, 1});
      if (!(artin(lhs) == artin(rhs))) {
        ok = false;
        witness = "adjacent pair i=" + itos(i);
      }
    }
    for (int i = 1; i <= n - 1 && ok; ++i)
      for (int j = i + 2; j <= n - 1 && ok; ++j) {
        BraidWord lhs(n), rhs(n);
        lhs.push({i, 1});
        lhs.push({j, 1});
        rhs.push({j, 1});
        rhs.push({i, 1});
        if (!(artin(lhs) == artin(rhs))) {
          ok = false;
          witness = "distant pair (" + itos(i) + "," + itos(j) + ")";
        }
      }
    report.add(bool_check("braid/artin-braid-relations", {{"strands", itos(n)}},
                          "the free-group action satisfies the braid relations",
                          ok, witness));
  }
  report.merge(injectivity_smoke(std::max(2, config.max_strands),
                                 config.max_braid_len));

  // -- the alternating twist assignment ------------------------------------
  for (int g = 2; g <= std::min(config.max_genus, 3); ++g) {
    const int max_sigma = 2 * g - 1;
    bool ok = true;
    std::string witness;
    const auto h_of = [&](std::initializer_list<int> idxs) {
      BraidWord b(max_sigma + 1);
      for (int i : idxs) b.push({i, 1});
      return harer(b, g);
    };
    for (int i = 1; i + 1 <= max_sigma - 1 && ok; ++i)
      if (!endo_equal(h_of({i, i + 1, i}).endo(), h_of({i + 1, i, i + 1}).endo())) {
        ok = false;
        witness = "adjacent pair i=" + itos(i);
      }
    for (int i = 1; i <= max_sigma && ok; ++i)
      for (int j = i + 2; j <= max_sigma && ok; ++j)
        if (!endo_equal(h_of({i, j}).endo(), h_of({j, i}).endo())) {
          ok = false;
          witness = "distant pair (" + itos(i) + "," + itos(j) + ")";
        }
    report.add(bool_check(
        "harer/braid-relations", {{"genus", itos(g)}},
        "s_i -> b_((i+1)/2) / w_(i/2) satisfies the braid relations", ok,
        witness));
  }
  report.add(bool_check(
      "harer/not-the-braiding", {{"r", "1"}, {"s", "1"}},
      "the alternating twist assignment sends sigma(1,1) to b1, not to "
      "beta(1,1)",
      !endo_equal(harer(sigma_rs(1, 1), 2).endo(), beta_rs_direct(1, 1).endo()),
      "harer(sigma(1,1)) coincides with beta(1,1)"));

  // -- finalize -------------------------------------------------------------
  if (!config.filter.empty()) {
    std::vector<CheckResult> kept;
    for (auto& c : report.checks)
      if (c.name.rfind(config.filter, 0) == 0) kept.push_back(std::move(c));
    report.checks = std::move(kept);
  }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.name != b.name) return a.name < b.name;
                     return a.params < b.params;
                   });
  return report;
}

}  // namespace mcgb
