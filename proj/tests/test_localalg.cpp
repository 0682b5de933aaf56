#include <doctest.h>

#include "frobpush/catalog.hpp"
#include "frobpush/errors.hpp"
#include "frobpush/localalg.hpp"
#include "oracles.hpp"

using namespace frobpush;

namespace {

const std::vector<FieldParams> kFields{FieldParams(2, 1), FieldParams(2, 2), FieldParams(2, 3), FieldParams(3, 1),
                                       FieldParams(3, 2), FieldParams(5, 1), FieldParams(7, 1)};

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("splitting numbers equal the free-summand box counts") {
  for (const auto& fp : kFields) {
    const auto q = fp.q_int();
    for (int eps = 1; eps <= 5; ++eps)
      CHECK(splitting_number(RncCone{eps}, fp) == oracle::veronese_box_count(1, eps, q));
    if (q <= 9)
      for (int d = 1; d <= 2; ++d)
        for (int eps = 1; eps <= 4; ++eps)
          CHECK(splitting_number(VeroneseCone{d, eps}, fp) == oracle::veronese_box_count(d, eps, q));
    if (q <= 8)
      for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s) CHECK(splitting_number(SegreCone{r, s}, fp) == oracle::segre_box_count(r, s, q));
  }
}

TEST_CASE("Segre splitting numbers through both routes") {
  CHECK(splitting_number(SegreCone{1, 1}, FieldParams(2, 1)) == 6);
  for (int p : {2, 3, 5, 7})
    for (int e = 1; e <= 2; ++e) {
      FieldParams fp(p, e);
      if (fp.q() > 9) continue;
      for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s) CHECK(segre_splitting_double_sum(r, s, fp) == segre_splitting_generating(r, s, fp));
    }
}

TEST_CASE("rational normal curve closed forms") {
  // 2k = 0 mod eps: q = 9, eps = 6 has 13 pairs with sum divisible by 6.
  CHECK(rnc_closed_forms(6, FieldParams(3, 2)).trivial == 13);
  for (const auto& fp : kFields)
    for (int eps = 2; eps <= 6; ++eps) {
      if (fp.q() < eps) {
        CHECK_THROWS_AS(rnc_closed_forms(eps, fp), OutOfRegime);
        continue;
      }
      const RncClosedForms c = rnc_closed_forms(eps, fp);
      CHECK(c.trivial == oracle::veronese_box_count(1, eps, fp.q_int()));
      const Decomposition d = cone_pushforward(RncCone{eps}, fp);
      CHECK(c.trivial == d.known_multiplicity(Summand::line({0})));
      CHECK(c.minus_l == d.known_multiplicity(Summand::line({-1})));
    }
  // eps = p: q^2 / p.
  CHECK(splitting_number(RncCone{2}, FieldParams(2, 3)) == 32);
  CHECK(splitting_number(RncCone{3}, FieldParams(3, 2)) == 27);
}

TEST_CASE("cone pushforwards have rank q^dim and reduced classes") {
  for (const auto& fp : kFields) {
    if (fp.q() > 8) continue;
    for (const ConeKind& k : std::vector<ConeKind>{RncCone{3}, VeroneseCone{2, 2}, SegreCone{1, 2}}) {
      const Decomposition d = cone_pushforward(k, fp);
      BigInt total = 0;
      for (const auto& [s, m] : d.entries()) total += *m;
      CHECK(total == pow(fp.q(), static_cast<unsigned>(cone_dimension(k))));
    }
    const Decomposition rnc = cone_pushforward(RncCone{3}, fp);
    for (const auto& [s, m] : rnc.entries()) {
      CHECK(s.coords()[0] <= 0);
      CHECK(s.coords()[0] > -3);
    }
  }
}

TEST_CASE("Veronese splitting number by blocks and by the trivial class") {
  for (const auto& fp : kFields)
    for (int d = 1; d <= 3; ++d)
      for (int eps = 1; eps <= 4; ++eps)
        if (fp.q() >= eps && fp.q() <= 27)
          CHECK(splitting_number(VeroneseCone{d, eps}, fp) ==
                cone_pushforward(VeroneseCone{d, eps}, fp).known_multiplicity(Summand::line({0})));
}

TEST_CASE("F-signatures") {
  CHECK(f_signature(RncCone{4}) == frac(1, 4));
  CHECK(f_signature(VeroneseCone{2, 3}) == frac(1, 3));
  CHECK(f_signature(SegreCone{1, 1}) == frac(2, 3));
  CHECK(f_signature(SegreCone{1, 2}) == frac(11, 24));
  CHECK(f_signature_convergent(SegreCone{1, 1}, FieldParams(2, 1)) == frac(3, 4));
  CHECK_THROWS_AS(f_signature(SegreCone{0, 1}), InvalidParameter);
}

TEST_CASE("convergents approach the signature") {
  const std::vector<ConeKind> kinds{RncCone{2}, RncCone{3}, VeroneseCone{2, 2}, VeroneseCone{2, 3}, SegreCone{1, 1},
                                    SegreCone{1, 2}};
  for (int p : {2, 3, 5})
    for (const auto& k : kinds) {
      Rational previous = -1;
      for (int e = 1; e <= 4; ++e) {
        FieldParams fp(p, e);
        if (fp.q() > 125) break;
        const BigInt sn = splitting_number(k, fp);
        CHECK(sn >= 1);
        CHECK(sn <= pow(fp.q(), static_cast<unsigned>(cone_dimension(k))));
        const Rational err = abs(f_signature_convergent(k, fp) - f_signature(k));
        if (previous > 0) CHECK(err < previous);
        if (previous == 0) CHECK(err == 0);
        previous = err;
      }
    }
}
