#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobpush/combinat.hpp"
#include "frobpush/picard.hpp"

namespace frobpush {

enum class VerdictStatus { Ample, NefNotAmple, NotNef, NotAmpleWithWitness, SupportOnlyVerdict, Unknown };

std::string to_string(VerdictStatus s);
/// Inverse of to_string; throws InvalidParameter on an unknown name.
VerdictStatus verdict_status_from_string(const std::string& s);

struct Witness {
  /// Divisor the bundle was restricted to; the variety itself for summand-wise verdicts.
  std::string divisor;
  Summand summand;
  Multiplicity multiplicity;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// E_e = dual of F^e_* O with one trivial summand split off, on a split catalog family.
Decomposition trace_kernel(const VarietyDescriptor& v, const FieldParams& fp);

/// Ample, NefNotAmple or NotNef for a class on P^d or P^r x P^s.
VerdictStatus classify_class(const VarietyDescriptor& v, const PicClass& c);

/// Summand-wise verdict for a sum of line bundles on P^d or P^r x P^s.
Verdict ample_verdict(const Decomposition& d);

/// Restricts F^e_* O to the family's distinguished divisor and looks for a
/// summand there whose dual is not ample once one trivial copy is split off.
Verdict ee_verdict_via_restriction(const VarietyDescriptor& v, const FieldParams& fp);

struct QuadricReport {
  Decomposition kernel_support;
  Verdict support_verdict;
  /// Ample iff p != 2.
  Verdict stated_verdict;
  bool agree;
  /// The common verdict, or SupportOnlyVerdict when the two disagree.
  Verdict verdict;
};
QuadricReport quadric_ee_verdict(int d, const FieldParams& fp);

/// sum_{n=0}^{q-1} det F^e_* O(n) on P^d.
PicClass alpha_det_projspace(int d, const FieldParams& fp);
/// -d q^d (q-1) / 2.
BigInt alpha_det_closed(int d, const FieldParams& fp);

struct VolumeCheck {
  bool holds;
  /// (C(aq+d, d) - C(a+d, d)) d! / q^d.
  Rational deficit;
};
VolumeCheck volume_identity_projspace(int d, std::int64_t a, const FieldParams& fp);

}  // namespace frobpush
