#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobpush/combinat.hpp"

namespace frobpush {

using Coords = std::vector<std::int64_t>;
using Basis = std::vector<std::string>;

class VarietyDescriptor;

struct ProjSpace {
  int d;
  friend bool operator==(const ProjSpace&, const ProjSpace&) = default;
};

/// P^r x P^s.
struct Product {
  int r;
  int s;
  friend bool operator==(const Product&, const Product&) = default;
};

/// Total space of L_0 + ... + L_d over a base; Pic is identified with Pic(base).
struct SplitBundleTotalSpace {
  std::shared_ptr<const VarietyDescriptor> base;
  std::vector<Coords> twists;
  friend bool operator==(const SplitBundleTotalSpace& a, const SplitBundleTotalSpace& b);
};

struct Hirzebruch {
  int eps;
  friend bool operator==(const Hirzebruch&, const Hirzebruch&) = default;
};

/// Blowup of P^d along a linear subspace of dimension r-1.
struct LinearBlowup {
  int d;
  int r;
  friend bool operator==(const LinearBlowup&, const LinearBlowup&) = default;
};

/// Blowup at the vertex of the projective cone over the eps-th Veronese of P^d.
struct VeroneseConeBlowup {
  int d;
  int eps;
  friend bool operator==(const VeroneseConeBlowup&, const VeroneseConeBlowup&) = default;
};

/// Blowup at the vertex of the projective cone over the Segre P^r x P^s.
struct SegreConeBlowup {
  int r;
  int s;
  friend bool operator==(const SegreConeBlowup&, const SegreConeBlowup&) = default;
};

/// Smooth quadric hypersurface Q^d in P^{d+1}.
struct Quadric {
  int d;
  friend bool operator==(const Quadric&, const Quadric&) = default;
};

struct RncCone {
  int eps;
  friend bool operator==(const RncCone&, const RncCone&) = default;
};
struct VeroneseCone {
  int d;
  int eps;
  friend bool operator==(const VeroneseCone&, const VeroneseCone&) = default;
};
struct SegreCone {
  int r;
  int s;
  friend bool operator==(const SegreCone&, const SegreCone&) = default;
};
using ConeKind = std::variant<RncCone, VeroneseCone, SegreCone>;

/// The singular projective cone P, carrying Weil classes.
struct ConeP {
  ConeKind kind;
  friend bool operator==(const ConeP&, const ConeP&) = default;
};

class VarietyDescriptor {
 public:
  using Variant = std::variant<ProjSpace, Product, SplitBundleTotalSpace, Hirzebruch, LinearBlowup,
                               VeroneseConeBlowup, SegreConeBlowup, Quadric, ConeP>;

  template <class T>
    requires std::is_constructible_v<Variant, T>
  VarietyDescriptor(T v) : value_(std::move(v)) {
    validate();
  }

  const Variant& value() const { return value_; }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&value_);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(value_);
  }

  /// Short identifier used in CLI flags and JSON: "projspace", "hirzebruch", ...
  std::string tag() const;
  int dimension() const;
  Basis default_basis() const;
  /// Every basis a decomposition on this variety may be expressed in.
  std::vector<Basis> bases() const;
  /// Relations between generators that are not part of the free basis.
  std::string relations() const;
  std::string to_string() const;

  friend bool operator==(const VarietyDescriptor& a, const VarietyDescriptor& b) {
    return a.value_ == b.value_;
  }

 private:
  void validate() const;
  Variant value_;
};

std::string cone_kind_tag(const ConeKind& kind);

/// A class in the Picard (or class) group in a declared basis.
struct PicClass {
  Basis basis;
  Coords coords;

  static PicClass zero(const Basis& basis) { return {basis, Coords(basis.size(), 0)}; }
  friend bool operator==(const PicClass&, const PicClass&) = default;
};

struct LineBundle {
  Coords coords;
  friend auto operator<=>(const LineBundle&, const LineBundle&) = default;
};

/// S(j), the spinor bundle twisted by O(j); only lives on quadrics.
struct SpinorTwist {
  std::int64_t j;
  friend auto operator<=>(const SpinorTwist&, const SpinorTwist&) = default;
};

struct Summand {
  std::variant<LineBundle, SpinorTwist> kind;

  static Summand line(Coords c) { return {LineBundle{std::move(c)}}; }
  static Summand spinor(std::int64_t j) { return {SpinorTwist{j}}; }

  bool is_line() const { return std::holds_alternative<LineBundle>(kind); }
  bool is_spinor() const { return std::holds_alternative<SpinorTwist>(kind); }
  const Coords& coords() const { return std::get<LineBundle>(kind).coords; }
  std::int64_t spinor_index() const { return std::get<SpinorTwist>(kind).j; }

  friend bool operator==(const Summand&, const Summand&) = default;
  friend bool operator<(const Summand& a, const Summand& b) { return a.kind < b.kind; }
};

/// Rank of one copy of the summand on the given variety.
BigInt summand_rank(const Summand& s, const VarietyDescriptor& v);

/// Known multiplicity, or nullopt when only the support is known.
using Multiplicity = std::optional<BigInt>;

/// Formal direct sum of summands with big-integer multiplicities.
class Decomposition {
 public:
  Decomposition(VarietyDescriptor variety, Basis basis, bool support_only = false);
  explicit Decomposition(VarietyDescriptor variety);

  const VarietyDescriptor& variety() const { return variety_; }
  const Basis& basis() const { return basis_; }
  bool support_only() const { return support_only_; }
  const std::map<Summand, Multiplicity>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Adds `mult` copies, coalescing with an existing entry.  Zero is ignored.
  void add(const Summand& s, const BigInt& mult);
  void add(const Coords& c, const BigInt& mult) { add(Summand::line(c), mult); }
  /// Records a summand whose multiplicity is positive but unknown.
  void add_support(const Summand& s);

  /// Multiplicity of a summand; zero when absent, nullopt when unknown.
  Multiplicity multiplicity(const Summand& s) const;
  BigInt known_multiplicity(const Summand& s) const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  void check_summand(const Summand& s) const;

  VarietyDescriptor variety_;
  Basis basis_;
  bool support_only_;
  std::map<Summand, Multiplicity> entries_;
};

BigInt rank(const Decomposition& d);
Decomposition dual(const Decomposition& d);
Decomposition twist(const Decomposition& d, const PicClass& c);
PicClass det(const Decomposition& d);
Decomposition remove_trivial(const Decomposition& d);
/// Multiplicity of the trivial line bundle (zero if absent).
BigInt trivial_multiplicity(const Decomposition& d);

/// Re-expresses every class in another basis of the same variety.
Decomposition change_basis(const Decomposition& d, const Basis& target);
PicClass change_basis(const PicClass& c, const VarietyDescriptor& v, const Basis& target);

/// A homomorphism between class groups, given by the image of each source
/// generator.  Used both for restrictions to divisors and for identifying
/// two descriptions of the same variety.
struct LatticeMap {
  std::string name;
  VarietyDescriptor source;
  Basis source_basis;
  VarietyDescriptor target;
  Basis target_basis;
  std::vector<Coords> images;

  Coords apply(const Coords& c) const;
};

/// Pushes every line-bundle class of d through the map and coalesces.
Decomposition apply_lattice_map(const Decomposition& d, const LatticeMap& map);

}  // namespace frobpush
