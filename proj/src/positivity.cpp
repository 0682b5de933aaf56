#include "frobpush/positivity.hpp"

#include <algorithm>

#include "frobpush/catalog.hpp"
#include "frobpush/errors.hpp"
#include "frobpush/restriction.hpp"

namespace frobpush {

namespace {

constexpr std::pair<VerdictStatus, const char*> kStatusNames[] = {
    {VerdictStatus::Ample, "Ample"},
    {VerdictStatus::NefNotAmple, "Nef-not-ample"},
    {VerdictStatus::NotNef, "Not-nef"},
    {VerdictStatus::NotAmpleWithWitness, "NotAmpleWithWitness"},
    {VerdictStatus::SupportOnlyVerdict, "SupportOnlyVerdict"},
    {VerdictStatus::Unknown, "Unknown"},
};

bool is_split_catalog(const VarietyDescriptor& v) {
  return v.is<ProjSpace>() || v.is<Product>() || v.is<Hirzebruch>() || v.is<LinearBlowup>() ||
         v.is<VeroneseConeBlowup>() || v.is<SegreConeBlowup>();
}

}  // namespace

std::string to_string(VerdictStatus s) {
  for (const auto& [status, name] : kStatusNames)
    if (status == s) return name;
  return "Unknown";
}

VerdictStatus verdict_status_from_string(const std::string& s) {
  for (const auto& [status, name] : kStatusNames)
    if (s == name) return status;
  throw InvalidParameter("unknown verdict status '" + s + "'");
}

Decomposition trace_kernel(const VarietyDescriptor& v, const FieldParams& fp) {
  if (!is_split_catalog(v)) throw Unsupported("trace kernel needs a split catalog family, got " + v.to_string());
  return dual(remove_trivial(pf_structure_sheaf(v, fp)));
}

VerdictStatus classify_class(const VarietyDescriptor& v, const PicClass& c) {
  if (!v.is<ProjSpace>() && !v.is<Product>())
    throw Unsupported("ample cone is only known on projective spaces and their products");
  if (c.basis != v.default_basis()) throw LatticeMismatch("class is not in the basis of " + v.to_string());
  const bool all_pos = std::all_of(c.coords.begin(), c.coords.end(), [](auto x) { return x > 0; });
  const bool all_nonneg = std::all_of(c.coords.begin(), c.coords.end(), [](auto x) { return x >= 0; });
  if (all_pos) return VerdictStatus::Ample;
  if (all_nonneg) return VerdictStatus::NefNotAmple;
  return VerdictStatus::NotNef;
}

Verdict ample_verdict(const Decomposition& d) {
  Verdict out{VerdictStatus::Ample, std::nullopt, {}};
  const std::string where = d.variety().to_string();
  // Walk from the largest class down so that a witness, when one is
  // reported, is the most positive offender of the worst kind.
  for (auto it = d.entries().rbegin(); it != d.entries().rend(); ++it) {
    const auto& [s, m] = *it;
    if (!s.is_line()) throw Unsupported("summand-wise verdicts need line-bundle summands");
    const VerdictStatus c = classify_class(d.variety(), PicClass{d.basis(), s.coords()});
    if (c == VerdictStatus::NotNef && out.status != VerdictStatus::NotNef) {
      out.status = VerdictStatus::NotNef;
      out.witness = Witness{where, s, m};
    } else if (c == VerdictStatus::NefNotAmple && out.status == VerdictStatus::Ample) {
      out.status = VerdictStatus::NefNotAmple;
      out.witness = Witness{where, s, m};
    }
  }
  return out;
}

Verdict ee_verdict_via_restriction(const VarietyDescriptor& v, const FieldParams& fp) {
  const DivisorRestriction div = distinguished_divisor(v);
  const Decomposition restricted = apply_lattice_map(pf_structure_sheaf(v, fp), div.map);
  const Summand trivial = Summand::line(Coords(div.map.target_basis.size(), 0));
  const BigInt t = restricted.known_multiplicity(trivial);
  if (t >= 2) {
    return {VerdictStatus::NotAmpleWithWitness,
            Witness{div.divisor, trivial, t},
            {"a trivial summand of F^e_* O restricted to " + div.divisor +
             " survives splitting off the canonical copy, so E_e has a trivial quotient there"}};
  }
  // Otherwise any summand with no negative coordinate dualizes to a non-ample
  // summand of E_e on the divisor.
  for (auto it = restricted.entries().rbegin(); it != restricted.entries().rend(); ++it) {
    const auto& [s, m] = *it;
    if (s == trivial) continue;
    const auto& c = s.coords();
    if (std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; }))
      return {VerdictStatus::NotAmpleWithWitness,
              Witness{div.divisor, s, m},
              {"the dual of this summand of F^e_* O restricted to " + div.divisor + " is not ample"}};
  }
  return {VerdictStatus::Unknown, std::nullopt, {"restriction to " + div.divisor + " certifies nothing"}};
}

QuadricReport quadric_ee_verdict(int d, const FieldParams& fp) {
  const Decomposition kernel = remove_trivial(quadric_support(d, fp));
  const std::string where = VarietyDescriptor(Quadric{d}).to_string();

  Verdict support{VerdictStatus::Ample, std::nullopt, {"derived from the summand support"}};
  for (const auto& [s, m] : kernel.entries()) {
    const bool ample = s.is_line() ? s.coords()[0] >= 1 : s.spinor_index() >= 2;
    if (!ample) {
      support.status = VerdictStatus::NotAmpleWithWitness;
      support.witness = Witness{where, s, m};
      break;
    }
  }
  if (d == 3 && fp.p() == 3 && fp.e() == 1) support.notes.push_back("(e,p)=(1,3) excludes S(2)");

  Verdict stated{fp.p() != 2 ? VerdictStatus::Ample : VerdictStatus::NotAmpleWithWitness, std::nullopt,
                 {"stated: ample if and only if p != 2"}};
  if (fp.p() == 2 && kernel.multiplicity(Summand::spinor(1)) != BigInt(0))
    stated.witness = Witness{where, Summand::spinor(1), std::nullopt};

  const bool support_ample = support.status == VerdictStatus::Ample;
  const bool stated_ample = stated.status == VerdictStatus::Ample;
  QuadricReport out{kernel, support, stated, support_ample == stated_ample, {}};
  if (out.agree) {
    out.verdict = support;
  } else {
    out.verdict = {VerdictStatus::SupportOnlyVerdict, support.witness,
                   {std::string("support says ") + (support_ample ? "ample" : "not ample") +
                    ", stated verdict says " + (stated_ample ? "ample" : "not ample")}};
  }
  return out;
}

PicClass alpha_det_projspace(int d, const FieldParams& fp) {
  const std::int64_t q = fp.q_int();
  PicClass total = PicClass::zero({"H"});
  for (std::int64_t n = 0; n < q; ++n) total.coords[0] += det(pf_projspace(d, n, fp)).coords[0];
  return total;
}

BigInt alpha_det_closed(int d, const FieldParams& fp) {
  const BigInt& q = fp.q();
  return -(BigInt(d) * pow(q, static_cast<unsigned>(d)) * (q - 1)) / 2;
}

VolumeCheck volume_identity_projspace(int d, std::int64_t a, const FieldParams& fp) {
  if (d < 1 || a < 1) throw InvalidParameter("volume identity needs d, a >= 1");
  const BigInt& q = fp.q();
  const BigInt lhs = binom(BigInt(static_cast<long>(a)) * q + d, d);
  const BigInt base = binom(a + d, d);
  BigInt rhs = base;
  for (int i = 1; i <= d; ++i) rhs += a_mult(i, 0, d, fp) * binom(a - i + d, d);
  Rational deficit((lhs - base) * factorial(static_cast<unsigned>(d)), pow(q, static_cast<unsigned>(d)));
  deficit.canonicalize();
  return {lhs == rhs, deficit};
}

}  // namespace frobpush
