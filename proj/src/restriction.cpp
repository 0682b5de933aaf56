#include "frobpush/restriction.hpp"

#include "frobpush/catalog.hpp"
#include "frobpush/errors.hpp"

namespace frobpush {

DivisorRestriction distinguished_divisor(const VarietyDescriptor& v) {
  if (const auto* h = v.get_if<Hirzebruch>())
    return {"C0", {"restriction to C0", v, {"C0", "f"}, ProjSpace{1}, {"H"}, {{-h->eps}, {1}}}};
  if (const auto* b = v.get_if<LinearBlowup>())
    return {"E", {"restriction to E", v, {"H", "H'"}, ProjSpace{b->d - b->r}, {"H"}, {{0}, {1}}}};
  if (const auto* c = v.get_if<VeroneseConeBlowup>())
    return {"E", {"restriction to E", v, {"H", "H'"}, ProjSpace{c->d}, {"H"}, {{0}, {1}}}};
  if (const auto* s = v.get_if<SegreConeBlowup>())
    return {"E",
            {"restriction to E", v, {"H", "G1", "G2"}, Product{s->r, s->s}, {"H1", "H2"}, {{0, 0}, {1, 0}, {0, 1}}}};
  throw Unsupported("no distinguished divisor is declared on " + v.to_string());
}

Decomposition restrict_hirzebruch_C0(const Decomposition& d) {
  if (!d.variety().is<Hirzebruch>()) throw LatticeMismatch("restriction to C0 needs a Hirzebruch surface");
  return apply_lattice_map(d, distinguished_divisor(d.variety()).map);
}

BigInt blowup_E_closed_form(int d, int r, std::int64_t k, const FieldParams& fp) {
  return pow(fp.q(), static_cast<unsigned>(r - 1)) *
         (a_mult(k + 1, 0, d - r + 1, fp) - a_mult(k + 1, 0, d - r, fp) + a_mult(k, 0, d - r, fp));
}

Decomposition restrict_linear_blowup_E(int d, int r, const FieldParams& fp) {
  const VarietyDescriptor v = LinearBlowup{d, r};
  Decomposition out = apply_lattice_map(pf_linear_blowup(d, r, fp), distinguished_divisor(v).map);
  for (int k = 0; k <= d - r; ++k) {
    const BigInt closed = blowup_E_closed_form(d, r, k, fp);
    const BigInt summed = out.known_multiplicity(Summand::line({-k}));
    if (closed != summed)
      throw Error("restriction to E: b-sum " + summed.get_str() + " != closed form " + closed.get_str() +
                  " at k=" + std::to_string(k));
  }
  return out;
}

BlowupClaimCheck blowup_trivial_claim_check(int d, int r, const FieldParams& fp) {
  const BigInt computed = restrict_linear_blowup_E(d, r, fp).known_multiplicity(Summand::line({0}));
  const BigInt claimed = pow(fp.q(), static_cast<unsigned>(r)) * binom(fp.q() + d - r, d - r);
  return {computed, claimed, computed == claimed};
}

Decomposition restrict_veronese_cone_E(int d, int eps, const FieldParams& fp) {
  const VarietyDescriptor v = VeroneseConeBlowup{d, eps};
  return apply_lattice_map(pf_veronese_cone(d, eps, 0, 0, fp), distinguished_divisor(v).map);
}

Decomposition restrict_segre_cone_E(int r, int s, const FieldParams& fp) {
  const VarietyDescriptor v = SegreConeBlowup{r, s};
  return apply_lattice_map(pf_segre_cone(r, s, 0, 0, 0, fp), distinguished_divisor(v).map);
}

ChartCounts blowup_chart_oracle(const FieldParams& fp) {
  const std::int64_t q = fp.q_int();
  ChartCounts out{0, 0};
  for (std::int64_t i = 0; i < q; ++i)
    for (std::int64_t j = 0; j < q; ++j) {
      if (j <= i)
        ++out.trivial;
      else
        ++out.minus_one;
    }
  return out;
}

LatticeMap blowup_to_hirzebruch_map() {
  return {"Bl_pt P^2 = X_1", LinearBlowup{2, 1}, {"H", "E"}, Hirzebruch{1}, {"C0", "f"}, {{1, 1}, {1, 0}}};
}

LatticeMap veronese_to_hirzebruch_map(int eps) {
  return {"d=1 Veronese cone blowup = X_eps", VeroneseConeBlowup{1, eps}, {"H", "H'"}, Hirzebruch{eps},
          {"C0", "f"}, {{1, eps}, {0, 1}}};
}

}  // namespace frobpush
