#pragma once

#include "frobpush/combinat.hpp"
#include "frobpush/picard.hpp"

namespace frobpush {

/// F^e_* O_P on the projective cone P, basis ["L"].  For the rational normal
/// curve and Veronese cones the classes are taken in the local class group
/// Z/eps at the vertex, represented by 0, -L, ..., -(eps-1)L.  For the Segre
/// cone they live on the affine chart P \ H where L1 + L2 ~ 0.
Decomposition cone_pushforward(const ConeKind& kind, const FieldParams& fp);

/// Free rank of F^e_* of the cone's coordinate ring.
BigInt splitting_number(const ConeKind& kind, const FieldParams& fp);

/// sum_k sum_{j<q} a(k,j;r) a(k,j;s).
BigInt segre_splitting_double_sum(int r, int s, const FieldParams& fp);
/// sum over N of the products of coefficients of u^N in (1 + ... + u^{q-1})^{r+1} and ^{s+1}.
BigInt segre_splitting_generating(int r, int s, const FieldParams& fp);

/// Closed forms for the multiplicities of O_P and O_P(-L) on the rational
/// normal curve cone (q >= eps).
struct RncClosedForms {
  BigInt trivial;
  BigInt minus_l;
};
RncClosedForms rnc_closed_forms(int eps, const FieldParams& fp);

/// The limit of splitting_number / q^dim.
Rational f_signature(const ConeKind& kind);

/// splitting_number / q^dim as an exact rational.
Rational f_signature_convergent(const ConeKind& kind, const FieldParams& fp);

/// Krull dimension of the cone.
int cone_dimension(const ConeKind& kind);

}  // namespace frobpush
