#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "frobpush/combinat.hpp"
#include "frobpush/picard.hpp"

namespace frobpush {

/// F^e_* O(n) on P^d.
Decomposition pf_projspace(int d, std::int64_t n, const FieldParams& fp);

/// F^e_* O(u, v) on P^r x P^s.
Decomposition pf_product(int r, int s, std::int64_t u, std::int64_t v, const FieldParams& fp);

/// F^e_* of a line bundle on a projective space or a product of two.
Decomposition pf_base(const VarietyDescriptor& base, const Coords& c, const FieldParams& fp);

/// One pulled-back factor pi^* F^e_*(L_0^{i_0} ... L_d^{i_d} N), with the
/// number of exponent tuples producing that class.
struct PullbackRequest {
  Coords base_class;
  BigInt copies;
  friend bool operator==(const PullbackRequest&, const PullbackRequest&) = default;
};

/// Exponent tuples in [0, q-1]^{d+1} for the total space of L_0 + ... + L_d,
/// grouped by the resulting class on the base.
std::vector<PullbackRequest> pf_split_bundle_total_space(const std::vector<Coords>& twists, const Coords& n_class,
                                                         const FieldParams& fp);

/// Resolves every request with pf_base and pulls back; Pic of the total space
/// is identified with Pic of the base.
Decomposition resolve_total_space(const VarietyDescriptor& base, const std::vector<Coords>& twists,
                                  const Coords& n_class, const FieldParams& fp);

/// F^e_*(O_P(n) (x) pi^* N) on P(L_0 + ... + L_d) over a projective space or a
/// product.  Keys are [coefficient of O_P(1), base coordinates...].
std::map<Coords, BigInt> pf_split_projective_bundle(const VarietyDescriptor& base, const std::vector<Coords>& twists,
                                                    std::int64_t n, const Coords& n_class, const FieldParams& fp);

/// F^e_* O(u C0 + v f) on the Hirzebruch surface X_eps.
Decomposition pf_hirzebruch(int eps, std::int64_t u, std::int64_t v, const FieldParams& fp);

/// sigma_1 .. sigma_{eps+1}: multiplicities of O(-C0 - i f) in F^e_* O, read off pf_hirzebruch.
std::vector<BigInt> hirzebruch_sigma_blocks(int eps, const FieldParams& fp);

/// The residue closed forms for sigma_1 .. sigma_{eps+1}; needs q >= eps.
std::vector<BigInt> hirzebruch_sigma_closed(int eps, const FieldParams& fp);

/// b_{i,k}, the multiplicity of O(-iH - kH') in F^e_* O on Bl_{P^{r-1}} P^d.
BigInt blowup_b(int d, int r, std::int64_t i, std::int64_t k, const FieldParams& fp);

/// F^e_* O on Bl_{P^{r-1}} P^d in the basis [H, H'].
Decomposition pf_linear_blowup(int d, int r, const FieldParams& fp);

/// Partition data and block sums for F^e_* O(nH + n'H') on the Veronese cone blowup.
struct VeroneseBlocks {
  /// I[i-1] and J[i-1] are the inclusive ranges I_i and J_i (empty when first > second).
  std::vector<std::pair<std::int64_t, std::int64_t>> I;
  std::vector<std::pair<std::int64_t, std::int64_t>> J;
  int i_n;
  /// -1 when q-1-n = 0, which lies in J_{-1} = {0}.
  int i_n_prime;
  /// varsigma_k keyed by k, the multiplicity of O(-kH').
  std::map<std::int64_t, BigInt> varsigma;
  /// sigma_k keyed by k, the multiplicity of O(-E - kH').
  std::map<std::int64_t, BigInt> sigma;

  BigInt varsigma_at(std::int64_t k) const;
  BigInt sigma_at(std::int64_t k) const;
};

/// Needs 0 <= n, n' <= q-1 and q >= eps - n' >= 1.
VeroneseBlocks veronese_blocks(int d, int eps, std::int64_t n, std::int64_t n_prime, const FieldParams& fp);

/// F^e_* O(nH + n'H') on the Veronese cone blowup, basis [H, H'], through the partitions.
Decomposition pf_veronese_cone(int d, int eps, std::int64_t n, std::int64_t n_prime, const FieldParams& fp);

/// Same pushforward summed directly over j with floors and residues; valid for all n, n'.
Decomposition pf_veronese_cone_unpartitioned(int d, int eps, std::int64_t n, std::int64_t n_prime,
                                             const FieldParams& fp);

/// sigma_{k,l} = sum_{j=1}^{q-1} a(k,j;r) a(l,j;s).
BigInt segre_sigma(int r, int s, std::int64_t k, std::int64_t l, const FieldParams& fp);

/// F^e_* O(nH + n1 G1 + n2 G2) on the Segre cone blowup, basis [H, G1, G2].
Decomposition pf_segre_cone(int r, int s, std::int64_t n, std::int64_t n1, std::int64_t n2, const FieldParams& fp);

/// F^e_* O on any smooth catalog family.  Veronese cone blowups with q < eps
/// fall back to the unpartitioned sum.
Decomposition pf_structure_sheaf(const VarietyDescriptor& v, const FieldParams& fp);

/// Whether O(i) occurs in F^e_* omega^{1-q} on Q^d.
bool quadric_line_present(int d, std::int64_t i, const FieldParams& fp);
/// Whether S(j) occurs in F^e_* omega^{1-q} on Q^d.
bool quadric_spinor_present(int d, std::int64_t j, const FieldParams& fp);

/// Support of F^e_* omega^{1-q} on Q^d, d >= 3; only O has a known multiplicity (1).
Decomposition quadric_support(int d, const FieldParams& fp);

}  // namespace frobpush
