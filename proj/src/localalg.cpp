#include "frobpush/localalg.hpp"

#include <string>
#include <vector>

#include "frobpush/catalog.hpp"
#include "frobpush/errors.hpp"

namespace frobpush {

namespace {

/// Pushes the blowup decomposition to P and, for cones with Cartier index
/// eps >= 1, reduces each class into {0, -1, ..., -(eps-1)}.  eps = 0 keeps classes as they are.
Decomposition push_to_cone(const Decomposition& blowup, const ConeKind& kind, const Coords& l_images, int eps) {
  const VarietyDescriptor cone = ConeP{kind};
  Decomposition out(cone, Basis{"L"});
  for (const auto& [s, m] : blowup.entries()) {
    std::int64_t c = 0;
    for (std::size_t k = 0; k < l_images.size(); ++k) c += s.coords()[k] * l_images[k];
    if (eps > 0) c = -residue(-c, eps);
    out.add(Summand::line({c}), *m);
  }
  return out;
}

}  // namespace

int cone_dimension(const ConeKind& kind) { return VarietyDescriptor(ConeP{kind}).dimension(); }

Decomposition cone_pushforward(const ConeKind& kind, const FieldParams& fp) {
  if (const auto* k = std::get_if<RncCone>(&kind)) {
    // C0 is contracted to the vertex and f becomes a ruling.
    return push_to_cone(pf_hirzebruch(k->eps, 0, 0, fp), kind, {0, 1}, k->eps);
  }
  if (const auto* k = std::get_if<VeroneseCone>(&kind)) {
    // H = E + eps H' with E contracted and H' becoming L.
    const Decomposition x = pf_structure_sheaf(VeroneseConeBlowup{k->d, k->eps}, fp);
    return push_to_cone(x, kind, {k->eps, 1}, k->eps);
  }
  const auto& k = std::get<SegreCone>(kind);
  // On P \ H: E is contracted, G1 becomes L and G2 becomes -L.
  return push_to_cone(pf_segre_cone(k.r, k.s, 0, 0, 0, fp), kind, {0, 1, -1}, 0);
}

BigInt segre_splitting_double_sum(int r, int s, const FieldParams& fp) {
  const std::int64_t q = fp.q_int();
  BigInt total = 0;
  for (int k = 0; k <= std::min(r, s) + 1; ++k)
    for (std::int64_t j = 0; j < q; ++j) total += a_mult(k, j, r, fp) * a_mult(k, j, s, fp);
  return total;
}

namespace {

std::vector<BigInt> box_power(std::int64_t q, int power) {
  std::vector<BigInt> c{1};
  for (int t = 0; t < power; ++t) {
    std::vector<BigInt> next(c.size() + static_cast<std::size_t>(q - 1), 0);
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::int64_t b = 0; b < q; ++b) next[a + static_cast<std::size_t>(b)] += c[a];
    c = std::move(next);
  }
  return c;
}

}  // namespace

BigInt segre_splitting_generating(int r, int s, const FieldParams& fp) {
  const std::int64_t q = fp.q_int();
  const auto cu = box_power(q, r + 1);
  const auto cv = box_power(q, s + 1);
  BigInt total = 0;
  for (std::size_t n = 0; n < std::min(cu.size(), cv.size()); ++n) total += cu[n] * cv[n];
  return total;
}

RncClosedForms rnc_closed_forms(int eps, const FieldParams& fp) {
  if (eps < 1) throw InvalidParameter("cone needs eps >= 1");
  const BigInt& q = fp.q();
  if (q < eps) throw OutOfRegime("closed forms need q >= eps");
  const BigInt k = q % eps;
  if (k == 0) {
    const BigInt v = q * q / eps;
    return {v, v};
  }
  // A zero residue counts as eps; otherwise the form is off by one when 2k = 0 mod eps.
  auto rho = [&](long l) -> BigInt {
    const BigInt r = (k * l) % eps;
    return l == eps || r == 0 ? BigInt(eps) : r;
  };
  const BigInt r1 = rho(1), r2 = rho(2);
  Rational trivial = (Rational(q * q) - Rational(r2 * r2 - 2 * r1 * r1 + (eps + 2) * (2 * r1 - r2), 2) + eps) / eps;
  Rational minus_l = Rational(q * q + r1 * (eps - r1) - eps) / eps;
  trivial.canonicalize();
  minus_l.canonicalize();
  if (trivial.get_den() != 1 || minus_l.get_den() != 1)
    throw Error("cone closed forms are not integral for eps=" + std::to_string(eps) + ", q=" + q.get_str());
  return {BigInt(trivial.get_num()), BigInt(minus_l.get_num())};
}

BigInt splitting_number(const ConeKind& kind, const FieldParams& fp) {
  if (const auto* k = std::get_if<SegreCone>(&kind)) {
    const BigInt a = segre_splitting_double_sum(k->r, k->s, fp);
    const BigInt b = segre_splitting_generating(k->r, k->s, fp);
    if (a != b) throw Error("Segre splitting numbers disagree: " + a.get_str() + " vs " + b.get_str());
    return a;
  }
  if (const auto* k = std::get_if<VeroneseCone>(&kind); k && fp.q() >= k->eps) {
    const VeroneseBlocks b = veronese_blocks(k->d, k->eps, 0, 0, fp);
    BigInt total = 0;
    for (int t = 0; t <= k->d / k->eps; ++t) total += b.varsigma_at(t * k->eps) + b.sigma_at((t + 1) * k->eps);
    return total;
  }
  return cone_pushforward(kind, fp).known_multiplicity(Summand::line({0}));
}

Rational f_signature(const ConeKind& kind) {
  if (const auto* k = std::get_if<RncCone>(&kind)) {
    VarietyDescriptor{ConeP{kind}};
    return Rational(1, k->eps);
  }
  if (const auto* k = std::get_if<VeroneseCone>(&kind)) {
    VarietyDescriptor{ConeP{kind}};
    return Rational(1, k->eps);
  }
  const auto& k = std::get<SegreCone>(kind);
  VarietyDescriptor{ConeP{kind}};
  const int d = k.r + k.s + 1;
  Rational out(eulerian(d, k.r + 1), factorial(static_cast<unsigned>(d)));
  out.canonicalize();
  return out;
}

Rational f_signature_convergent(const ConeKind& kind, const FieldParams& fp) {
  Rational out(splitting_number(kind, fp), pow(fp.q(), static_cast<unsigned>(cone_dimension(kind))));
  out.canonicalize();
  return out;
}

}  // namespace frobpush
