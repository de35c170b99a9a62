#include <doctest.h>

#include "generators.hpp"
#include "gamma_sharp/approximant.hpp"
#include "gamma_sharp/correction.hpp"
#include "gamma_sharp/error.hpp"

using namespace gamma_sharp;

namespace {

Rational q(const char* s) { return parse_rational(s); }

std::vector<Rational> constants_of(const DerivationRecord& r) {
  std::vector<Rational> out;
  for (const auto& level : r.levels) {
    for (const auto& c : level.constants) out.push_back(c.value);
  }
  return out;
}

}  // namespace

TEST_CASE("mc_as_rational_function examples") {
  const CorrectionSpec g = make_solved_spec(Family::kGosperCF, {{q("1/72"), q("31/90")}});
  CHECK(mc_as_rational_function(g, 0) ==
        RationalFunction(Polynomial::constant(q("1/72")), Polynomial{q("31/90"), Rational(1)}));
  const CorrectionSpec r = make_solved_spec(Family::kRamanujanCF, {{q("-11/240"), q("79/154")}});
  CHECK(mc_as_rational_function(r, 0) ==
        RationalFunction(Polynomial::constant(q("-11/240")), Polynomial{q("79/154"), Rational(1)}));
  CHECK(mc_as_rational_function(g, -1).is_zero());
  CHECK(mc_as_rational_function(g, -1).den() == Polynomial::constant(Rational(1)));
}

TEST_CASE("collapsed degrees for the Gosper continued fraction") {
  const DerivationRecord rec = derive_family(Family::kGosperCF, 3);
  for (int k = 0; k <= 3; ++k) {
    const RationalFunction mc = mc_as_rational_function(rec.spec, k);
    CHECK(mc.num().degree() == k);
    CHECK(mc.den().degree() == k + 1);
  }
}

TEST_CASE("expand_difference examples") {
  const CorrectionSpec tmpl = make_template(Family::kGosperCF, 0);
  const AsymptoticSeries base = expand_difference(tmpl, -1, 6);
  CHECK(abs(base.coefficient(3)) == q("1/72"));
  CHECK(abs(base.coefficient(4)) == q("17/540"));
  const CorrectionSpec solved = make_solved_spec(Family::kGosperCF, {{q("1/72"), q("31/90")}});
  const AsymptoticSeries s = expand_difference(solved, 0, 7);
  CHECK(s.coefficient(3) == 0);
  CHECK(s.coefficient(4) == 0);
  CHECK(abs(s.coefficient(5)) == q("5929/1166400"));
}

TEST_CASE("expand_difference is linear in kappa_0 at order 3") {
  // coefficient of x^-3 depends on kappa_0 through a single additive term
  for (const char* k : {"0", "1/72", "1/10", "-3"}) {
    const CorrectionSpec s = make_solved_spec(Family::kGosperCF, {{q(k), q("1/2")}});
    const Rational c3 = expand_difference(s, 0, 6).coefficient(3);
    const Rational c3_base = expand_difference(s, -1, 6).coefficient(3);
    CHECK(abs(c3 - c3_base) == abs(q(k)));
  }
}

TEST_CASE("solve_next_unknown examples") {
  CorrectionSpec g = make_template(Family::kGosperCF, 0);
  const SolveOutcome k0 = solve_next_unknown(g, {0, 0});
  CHECK(k0.value == q("1/72"));
  CHECK(k0.target_order == 3);
  g.levels[0].kappa = k0.value;
  CHECK(solve_next_unknown(g, {0, 1}).value == q("31/90"));
  CHECK(solve_next_unknown(make_template(Family::kRamanujanCF, 0), {0, 0}).value == q("-11/240"));
}

TEST_CASE("derive_family examples") {
  const auto g = constants_of(derive_family(Family::kGosperCF, 1));
  CHECK(g[2] == q("5929/32400"));
  CHECK(g[3] == q("481937/3735270"));
  const auto p = constants_of(derive_family(Family::kGosperProduct, 0));
  CHECK(p[0] == q("-1/144"));
  CHECK(p[1] == q("4007/21600"));
  const auto m = constants_of(derive_family(Family::kRamanujanMixed, 1));
  REQUIRE(m.size() == 6);
  CHECK(m[2] == q("459733/15523200"));
  CHECK(m[3] == q("71181889/70798882"));
  CHECK(m[4] == q("717183502490887/520777318696096"));
  CHECK(m[5] == q("1118629052995381153799/1958878792277282473920"));
}

TEST_CASE("depth cap and experimental flag") {
  CHECK_THROWS_AS(derive_family(Family::kGosperCF, 4), Error);
  CHECK_THROWS_AS(derive_family(Family::kRamanujanMixed, 2), Error);
  try {
    derive_family(Family::kGosperCF, 9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUsage);
  }
}

TEST_CASE("residual_limit examples") {
  const DerivationRecord g = derive_family(Family::kGosperCF, 3);
  const ResidualLimit l0 = residual_limit(g, 0);
  CHECK(l0.mu == 4);
  CHECK(l0.magnitude == q("5929/4665600"));
  for (int k = 0; k <= 3; ++k) CHECK(residual_limit(g, k).mu == 2 * k + 4);
  const DerivationRecord r = derive_family(Family::kRamanujanCF, 0);
  const ResidualLimit base = residual_limit(r, -1);
  CHECK(base.mu == 4);
  CHECK(base.magnitude == q("11/11520"));
}

TEST_CASE("annihilation invariant") {
  const std::pair<Family, int> cases[] = {{Family::kGosperCF, 5}, {Family::kGosperProduct, 6},
                                          {Family::kRamanujanCF, 7}, {Family::kRamanujanMixed, 11}};
  for (auto [fam, first] : cases) {
    const DerivationRecord rec = derive_family(fam, max_published_depth(fam));
    for (const LevelRecord& level : rec.levels) {
      const int expected = fam == Family::kRamanujanMixed ? (level.level == 0 ? 7 : 11) : first + 2 * level.level;
      CHECK(level.surviving_order == expected);
      const AsymptoticSeries s = expand_difference(rec.spec, level.level, expected + 1);
      CHECK(s.leading_order() == expected);
      CHECK(s.coefficient(expected) == level.surviving_coefficient);
      for (const SolvedConstant& c : level.constants) CHECK(s.coefficient(c.target_order) == 0);
    }
  }
}

TEST_CASE("structure collapse agrees with nested evaluation (property)") {
  gen::Source g(3);
  for (Family fam : {Family::kGosperCF, Family::kGosperProduct, Family::kRamanujanCF, Family::kRamanujanMixed}) {
    const DerivationRecord rec = derive_family(fam, max_published_depth(fam));
    for (int k = 0; k <= rec.k_max; ++k) {
      const RationalFunction mc = mc_as_rational_function(rec.spec, k);
      for (int i = 0; i < 20; ++i) {
        const Rational x = g.positive(200, 7) + 1;
        CHECK(mc(x) == cf_approximant(rec.spec.levels, k, x));
      }
    }
  }
}

TEST_CASE("derive_family is deterministic") {
  const DerivationRecord a = derive_family(Family::kRamanujanCF, 2);
  const DerivationRecord b = derive_family(Family::kRamanujanCF, 2);
  CHECK(constants_of(a) == constants_of(b));
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    CHECK(a.levels[i].surviving_coefficient == b.levels[i].surviving_coefficient);
  }
}

TEST_CASE("solver reports missing rational roots") {
  // kappa_0 fixed to a wrong value leaves the order-3 coefficient nonzero;
  // lambda_0 cannot repair it, so its target is order 3 with no root.
  CorrectionSpec g = make_template(Family::kGosperCF, 0);
  g.levels[0].kappa = Rational(0);
  CHECK_THROWS_AS(solve_next_unknown(g, {0, 1}), Error);
}
