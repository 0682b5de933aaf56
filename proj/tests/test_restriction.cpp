#include <doctest.h>

#include "frobpush/catalog.hpp"
#include "frobpush/errors.hpp"
#include "frobpush/restriction.hpp"

using namespace frobpush;

TEST_CASE("chart oracle equals the restriction to the exceptional curve") {
  for (int p : {2, 3, 5, 7, 11, 13})
    for (int e = 1; e <= 4; ++e) {
      FieldParams fp(p, e);
      if (fp.q() > 16) continue;
      const BigInt& q = fp.q();
      const ChartCounts c = blowup_chart_oracle(fp);
      CHECK(c.trivial == q * (q + 1) / 2);
      CHECK(c.minus_one == q * (q - 1) / 2);
      const Decomposition e1 = restrict_linear_blowup_E(2, 1, fp);
      CHECK(e1.known_multiplicity(Summand::line({0})) == c.trivial);
      CHECK(e1.known_multiplicity(Summand::line({-1})) == c.minus_one);
      CHECK(e1.entries().size() == 2);
      // Same numbers through X_1 and C0.
      const Decomposition c0 = restrict_hirzebruch_C0(pf_hirzebruch(1, 0, 0, fp));
      CHECK(c0 == Decomposition(e1));
    }
}

TEST_CASE("restriction of the blowup of P^2 at q = 3") {
  const Decomposition d = restrict_linear_blowup_E(2, 1, FieldParams(3, 1));
  CHECK(d.known_multiplicity(Summand::line({0})) == 6);
  CHECK(d.known_multiplicity(Summand::line({-1})) == 3);
}

TEST_CASE("restrictions keep the rank") {
  for (int p : {2, 3, 5})
    for (int e = 1; e <= 2; ++e) {
      FieldParams fp(p, e);
      for (int d = 2; d <= 4; ++d)
        for (int r = 1; r < d; ++r)
          CHECK(rank(restrict_linear_blowup_E(d, r, fp)) == pow(fp.q(), static_cast<unsigned>(d)));
      for (int d = 1; d <= 3; ++d)
        for (int eps = 1; eps <= 4; ++eps)
          if (fp.q() >= eps)
            CHECK(rank(restrict_veronese_cone_E(d, eps, fp)) == pow(fp.q(), static_cast<unsigned>(d + 1)));
      CHECK(rank(restrict_segre_cone_E(1, 2, fp)) == pow(fp.q(), 4));
    }
}

TEST_CASE("the blowup closed form counts restricted classes") {
  for (int p : {2, 3})
    for (int e = 1; e <= 2; ++e) {
      FieldParams fp(p, e);
      for (int d = 2; d <= 4; ++d)
        for (int r = 1; r < d; ++r) {
          const Decomposition full = pf_linear_blowup(d, r, fp);
          // Restriction by hand: a class iH' + kH'' lands on O(k') with k' the H' coefficient.
          std::map<std::int64_t, BigInt> by_k;
          for (const auto& [s, m] : full.entries()) by_k[s.coords()[1]] += *m;
          for (int k = 0; k <= d - r; ++k) CHECK(blowup_E_closed_form(d, r, k, fp) == by_k[-k]);
        }
    }
}

TEST_CASE("trivial multiplicity on E against the stated value") {
  const BlowupClaimCheck c = blowup_trivial_claim_check(2, 1, FieldParams(3, 1));
  CHECK(c.computed == 6);
  CHECK(c.claimed == 12);
  CHECK_FALSE(c.agrees);
}

TEST_CASE("identifications with Hirzebruch surfaces") {
  for (int p : {2, 3, 5}) {
    FieldParams fp(p, 1);
    const auto bl = apply_lattice_map(change_basis(pf_linear_blowup(2, 1, fp), {"H", "E"}), blowup_to_hirzebruch_map());
    CHECK(bl == pf_hirzebruch(1, 0, 0, fp));
    for (int eps = 1; eps <= p; ++eps)
      CHECK(apply_lattice_map(pf_veronese_cone(1, eps, 0, 0, fp), veronese_to_hirzebruch_map(eps)) ==
            pf_hirzebruch(eps, 0, 0, fp));
  }
}

TEST_CASE("distinguished divisors") {
  CHECK(distinguished_divisor(Hirzebruch{2}).divisor == "C0");
  CHECK(distinguished_divisor(SegreConeBlowup{1, 1}).map.target == VarietyDescriptor(Product{1, 1}));
  CHECK_THROWS_AS(distinguished_divisor(ProjSpace{2}), Unsupported);
  CHECK_THROWS_AS(restrict_hirzebruch_C0(Decomposition(ProjSpace{1})), LatticeMismatch);
}
