#pragma once

#include <string>

#include "frobpush/combinat.hpp"
#include "frobpush/picard.hpp"

namespace frobpush {

/// A distinguished divisor together with the restriction of classes to it.
struct DivisorRestriction {
  std::string divisor;
  LatticeMap map;
};

/// The divisor each family restricts to: C0 on X_eps, E on the blowups.
/// Throws Unsupported for varieties without one.
DivisorRestriction distinguished_divisor(const VarietyDescriptor& v);

/// aC0 + bf |-> O(b - a eps) on C0 = P^1.
Decomposition restrict_hirzebruch_C0(const Decomposition& d);

/// Restriction of F^e_* O on Bl_{P^{r-1}} P^d to E, as O_E(-k) summands on P^{d-r}.
/// The b-sum and the closed form are both evaluated and must agree.
Decomposition restrict_linear_blowup_E(int d, int r, const FieldParams& fp);

/// q^{r-1}(a(k+1,0;d-r+1) - a(k+1,0;d-r) + a(k,0;d-r)).
BigInt blowup_E_closed_form(int d, int r, std::int64_t k, const FieldParams& fp);

/// The trivial multiplicity on E set against the value q^r C(q+d-r, d-r)
/// asserted in the literature for it.
struct BlowupClaimCheck {
  BigInt computed;
  BigInt claimed;
  bool agrees;
};
BlowupClaimCheck blowup_trivial_claim_check(int d, int r, const FieldParams& fp);

/// F^e_* O on the Veronese cone blowup restricted to E = P^d (H' |-> 1, E |-> -eps).
Decomposition restrict_veronese_cone_E(int d, int eps, const FieldParams& fp);

/// F^e_* O on the Segre cone blowup restricted to E = P^r x P^s.
Decomposition restrict_segre_cone_E(int r, int s, const FieldParams& fp);

/// Monomial pairs (i, j) in [0, q-1]^2 on the chart of Bl_0 A^2 that glue to
/// O (j <= i) and to O(-1) (j > i).
struct ChartCounts {
  BigInt trivial;
  BigInt minus_one;
};
ChartCounts blowup_chart_oracle(const FieldParams& fp);

/// Bl_{pt} P^2 in the basis [H, E] identified with X_1: H |-> C0 + f, E |-> C0.
LatticeMap blowup_to_hirzebruch_map();
/// The d = 1 Veronese cone blowup identified with X_eps: H |-> C0 + eps f, H' |-> f.
LatticeMap veronese_to_hirzebruch_map(int eps);

}  // namespace frobpush
