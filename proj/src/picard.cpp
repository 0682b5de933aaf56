#include "frobpush/picard.hpp"

#include <algorithm>
#include <sstream>

#include "frobpush/errors.hpp"

namespace frobpush {

bool operator==(const SplitBundleTotalSpace& a, const SplitBundleTotalSpace& b) {
  if (a.twists != b.twists) return false;
  if (!a.base || !b.base) return a.base == b.base;
  return *a.base == *b.base;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

std::string cone_kind_tag(const ConeKind& kind) {
  return std::visit(Overloaded{[](const RncCone&) { return std::string("rnc"); },
                               [](const VeroneseCone&) { return std::string("veronese"); },
                               [](const SegreCone&) { return std::string("segre"); }},
                    kind);
}

void VarietyDescriptor::validate() const {
  std::visit(
      Overloaded{
          [](const ProjSpace& v) { require(v.d >= 1, "projective space needs d >= 1"); },
          [](const Product& v) { require(v.r >= 1 && v.s >= 1, "product needs r, s >= 1"); },
          [](const SplitBundleTotalSpace& v) {
            require(v.base != nullptr, "split bundle needs a base variety");
            require(!v.twists.empty(), "split bundle needs at least one twist");
            const auto n = v.base->default_basis().size();
            for (const auto& t : v.twists)
              if (t.size() != n) throw LatticeMismatch("split bundle twist does not live on the base lattice");
          },
          [](const Hirzebruch& v) { require(v.eps >= 0, "Hirzebruch surface needs eps >= 0"); },
          [](const LinearBlowup& v) {
            require(v.d >= 2 && v.r >= 1 && v.r <= v.d - 1,
                    "linear blowup needs 1 <= r <= d-1 (i.e. d-(r-1) >= 2)");
          },
          [](const VeroneseConeBlowup& v) {
            require(v.d >= 1 && v.eps >= 1, "Veronese cone blowup needs d >= 1 and eps >= 1");
          },
          [](const SegreConeBlowup& v) { require(v.r >= 1 && v.s >= 1, "Segre cone blowup needs r, s >= 1"); },
          [](const Quadric& v) { require(v.d >= 1, "quadric needs d >= 1"); },
          [](const ConeP& v) {
            std::visit(Overloaded{[](const RncCone& k) { require(k.eps >= 1, "cone needs eps >= 1"); },
                                  [](const VeroneseCone& k) {
                                    require(k.d >= 1 && k.eps >= 1, "Veronese cone needs d >= 1 and eps >= 1");
                                  },
                                  [](const SegreCone& k) {
                                    require(k.r >= 1 && k.s >= 1, "Segre cone needs r, s >= 1");
                                  }},
                       v.kind);
          }},
      value_);
}

std::string VarietyDescriptor::tag() const {
  return std::visit(Overloaded{[](const ProjSpace&) { return std::string("projspace"); },
                               [](const Product&) { return std::string("product"); },
                               [](const SplitBundleTotalSpace&) { return std::string("split-bundle"); },
                               [](const Hirzebruch&) { return std::string("hirzebruch"); },
                               [](const LinearBlowup&) { return std::string("blowup-linear"); },
                               [](const VeroneseConeBlowup&) { return std::string("veronese-cone"); },
                               [](const SegreConeBlowup&) { return std::string("segre-cone"); },
                               [](const Quadric&) { return std::string("quadric"); },
                               [](const ConeP&) { return std::string("cone-p"); }},
                    value_);
}

int VarietyDescriptor::dimension() const {
  return std::visit(
      Overloaded{[](const ProjSpace& v) { return v.d; }, [](const Product& v) { return v.r + v.s; },
                 [](const SplitBundleTotalSpace& v) {
                   return v.base->dimension() + static_cast<int>(v.twists.size());
                 },
                 [](const Hirzebruch&) { return 2; }, [](const LinearBlowup& v) { return v.d; },
                 [](const VeroneseConeBlowup& v) { return v.d + 1; },
                 [](const SegreConeBlowup& v) { return v.r + v.s + 1; }, [](const Quadric& v) { return v.d; },
                 [](const ConeP& v) {
                   return std::visit(Overloaded{[](const RncCone&) { return 2; },
                                                [](const VeroneseCone& k) { return k.d + 1; },
                                                [](const SegreCone& k) { return k.r + k.s + 1; }},
                                     v.kind);
                 }},
      value_);
}

Basis VarietyDescriptor::default_basis() const {
  return std::visit(Overloaded{[](const ProjSpace&) { return Basis{"H"}; },
                               [](const Product&) { return Basis{"H1", "H2"}; },
                               [](const SplitBundleTotalSpace& v) { return v.base->default_basis(); },
                               [](const Hirzebruch&) { return Basis{"C0", "f"}; },
                               [](const LinearBlowup&) { return Basis{"H", "H'"}; },
                               [](const VeroneseConeBlowup&) { return Basis{"H", "H'"}; },
                               [](const SegreConeBlowup&) { return Basis{"H", "G1", "G2"}; },
                               [](const Quadric&) { return Basis{"O(1)"}; },
                               [](const ConeP&) { return Basis{"L"}; }},
                    value_);
}

std::vector<Basis> VarietyDescriptor::bases() const {
  if (is<LinearBlowup>()) return {Basis{"H", "H'"}, Basis{"H", "E"}};
  if (is<VeroneseConeBlowup>()) return {Basis{"H", "H'"}, Basis{"E", "H'"}};
  return {default_basis()};
}

std::string VarietyDescriptor::relations() const {
  return std::visit(
      Overloaded{[](const Hirzebruch&) { return std::string("C1 ~ C0 + eps*f"); },
                 [](const LinearBlowup&) { return std::string("H ~ H' + E"); },
                 [](const VeroneseConeBlowup&) { return std::string("H ~ E + eps*H'"); },
                 [](const SegreConeBlowup&) { return std::string("H ~ E + G1 + G2"); },
                 [](const ConeP& v) {
                   if (std::holds_alternative<SegreCone>(v.kind))
                     return std::string("L = L1 and L1 + L2 ~ 0 on the affine chart P \\ H");
                   return std::string("eps*L ~ H is Cartier; classes are taken modulo eps*L at the vertex");
                 },
                 [](const auto&) { return std::string(); }},
      value_);
}

std::string VarietyDescriptor::to_string() const {
  std::ostringstream os;
  std::visit(Overloaded{[&](const ProjSpace& v) { os << "P^" << v.d; },
                        [&](const Product& v) { os << "P^" << v.r << " x P^" << v.s; },
                        [&](const SplitBundleTotalSpace& v) {
                          os << "V(" << v.twists.size() << " line bundles) over " << v.base->to_string();
                        },
                        [&](const Hirzebruch& v) { os << "X_" << v.eps; },
                        [&](const LinearBlowup& v) { os << "Bl_{P^" << v.r - 1 << "} P^" << v.d; },
                        [&](const VeroneseConeBlowup& v) {
                          os << "blowup of the cone over v_" << v.eps << "(P^" << v.d << ")";
                        },
                        [&](const SegreConeBlowup& v) {
                          os << "blowup of the cone over P^" << v.r << " x P^" << v.s;
                        },
                        [&](const Quadric& v) { os << "Q^" << v.d; },
                        [&](const ConeP& v) {
                          std::visit(Overloaded{[&](const RncCone& k) {
                                                  os << "cone over the rational normal curve of degree " << k.eps;
                                                },
                                                [&](const VeroneseCone& k) {
                                                  os << "cone over v_" << k.eps << "(P^" << k.d << ")";
                                                },
                                                [&](const SegreCone& k) {
                                                  os << "cone over P^" << k.r << " x P^" << k.s;
                                                }},
                                     v.kind);
                        }},
             value_);
  return os.str();
}

BigInt summand_rank(const Summand& s, const VarietyDescriptor& v) {
  if (s.is_line()) return 1;
  const auto* quadric = v.get_if<Quadric>();
  if (!quadric) throw Unsupported("spinor summands only exist on quadrics");
  return pow(BigInt(2), static_cast<unsigned>(quadric->d / 2));
}

Decomposition::Decomposition(VarietyDescriptor variety, Basis basis, bool support_only)
    : variety_(std::move(variety)), basis_(std::move(basis)), support_only_(support_only) {
  const auto allowed = variety_.bases();
  if (std::find(allowed.begin(), allowed.end(), basis_) == allowed.end())
    throw LatticeMismatch("basis is not a declared basis of " + variety_.to_string());
}

Decomposition::Decomposition(VarietyDescriptor variety)
    : Decomposition(variety, variety.default_basis(), false) {}

void Decomposition::check_summand(const Summand& s) const {
  if (s.is_line()) {
    if (s.coords().size() != basis_.size())
      throw LatticeMismatch("class has " + std::to_string(s.coords().size()) + " coordinates, basis has " +
                            std::to_string(basis_.size()));
  } else if (!variety_.is<Quadric>()) {
    throw Unsupported("spinor summands only exist on quadrics");
  }
}

void Decomposition::add(const Summand& s, const BigInt& mult) {
  check_summand(s);
  if (mult < 0) throw InvalidParameter("multiplicities must be non-negative");
  if (mult == 0) return;
  auto [it, inserted] = entries_.try_emplace(s, mult);
  if (!inserted && it->second) *it->second += mult;
}

void Decomposition::add_support(const Summand& s) {
  check_summand(s);
  if (!support_only_) throw Unsupported("unknown multiplicities need a support-only decomposition");
  entries_[s] = std::nullopt;
}

Multiplicity Decomposition::multiplicity(const Summand& s) const {
  auto it = entries_.find(s);
  if (it == entries_.end()) return BigInt(0);
  return it->second;
}

BigInt Decomposition::known_multiplicity(const Summand& s) const {
  auto m = multiplicity(s);
  if (!m) throw Unsupported("multiplicity is unknown (support-only data)");
  return *m;
}

BigInt rank(const Decomposition& d) {
  if (d.support_only()) throw Unsupported("rank is undefined for a support-only decomposition");
  BigInt total = 0;
  for (const auto& [s, m] : d.entries()) total += *m * summand_rank(s, d.variety());
  return total;
}

namespace {

Decomposition rebuild(const Decomposition& d, auto&& map_summand) {
  Decomposition out(d.variety(), d.basis(), d.support_only());
  for (const auto& [s, m] : d.entries()) {
    Summand t = map_summand(s);
    if (m)
      out.add(t, *m);
    else
      out.add_support(t);
  }
  return out;
}

}  // namespace

Decomposition dual(const Decomposition& d) {
  return rebuild(d, [](const Summand& s) {
    if (s.is_spinor()) return Summand::spinor(1 - s.spinor_index());  // S^dual = S(1)
    Coords c = s.coords();
    for (auto& x : c) x = -x;
    return Summand::line(std::move(c));
  });
}

Decomposition twist(const Decomposition& d, const PicClass& c) {
  if (c.basis != d.basis() || c.coords.size() != d.basis().size())
    throw LatticeMismatch("twist class is not expressed in the decomposition's basis");
  return rebuild(d, [&](const Summand& s) {
    if (s.is_spinor()) return Summand::spinor(s.spinor_index() + c.coords[0]);
    Coords out = s.coords();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += c.coords[k];
    return Summand::line(std::move(out));
  });
}

PicClass det(const Decomposition& d) {
  if (d.support_only()) throw Unsupported("determinant needs known multiplicities");
  std::vector<BigInt> acc(d.basis().size(), 0);
  for (const auto& [s, m] : d.entries()) {
    if (s.is_spinor()) throw Unsupported("determinant of spinor summands is not supported");
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += *m * BigInt(static_cast<long>(s.coords()[k]));
  }
  PicClass out = PicClass::zero(d.basis());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (!acc[k].fits_slong_p()) throw Unsupported("determinant coordinate " + acc[k].get_str() + " overflows");
    out.coords[k] = acc[k].get_si();
  }
  return out;
}

BigInt trivial_multiplicity(const Decomposition& d) {
  return d.known_multiplicity(Summand::line(Coords(d.basis().size(), 0)));
}

Decomposition remove_trivial(const Decomposition& d) {
  const Summand trivial = Summand::line(Coords(d.basis().size(), 0));
  auto it = d.entries().find(trivial);
  if (it == d.entries().end())
    throw NotFSplit("no trivial summand to split off: not an F-split representation");
  if (!it->second) throw Unsupported("trivial summand has unknown multiplicity");
  Decomposition out(d.variety(), d.basis(), d.support_only());
  for (const auto& [s, m] : d.entries()) {
    if (s == trivial) {
      out.add(s, *m - 1);
    } else if (m) {
      out.add(s, *m);
    } else {
      out.add_support(s);
    }
  }
  return out;
}

PicClass change_basis(const PicClass& c, const VarietyDescriptor& v, const Basis& target) {
  if (c.basis == target) return c;
  const auto& x = c.coords;
  if (v.is<LinearBlowup>()) {
    // H' = H - E.
    if (c.basis == Basis{"H", "H'"} && target == Basis{"H", "E"}) return {target, {x[0] + x[1], -x[1]}};
    if (c.basis == Basis{"H", "E"} && target == Basis{"H", "H'"}) return {target, {x[0] + x[1], -x[1]}};
  }
  if (const auto* ver = v.get_if<VeroneseConeBlowup>()) {
    // H = E + eps H'.
    if (c.basis == Basis{"H", "H'"} && target == Basis{"E", "H'"}) return {target, {x[0], x[0] * ver->eps + x[1]}};
    if (c.basis == Basis{"E", "H'"} && target == Basis{"H", "H'"}) return {target, {x[0], x[1] - x[0] * ver->eps}};
  }
  throw LatticeMismatch("no change of basis to the requested basis on " + v.to_string());
}

Decomposition change_basis(const Decomposition& d, const Basis& target) {
  if (d.basis() == target) return d;
  Decomposition out(d.variety(), target, d.support_only());
  for (const auto& [s, m] : d.entries()) {
    Summand t = s.is_line() ? Summand::line(change_basis(PicClass{d.basis(), s.coords()}, d.variety(), target).coords)
                            : s;
    if (m)
      out.add(t, *m);
    else
      out.add_support(t);
  }
  return out;
}

Coords LatticeMap::apply(const Coords& c) const {
  if (c.size() != images.size()) throw LatticeMismatch("class does not live on the source lattice of " + name);
  Coords out(target_basis.size(), 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += c[k] * images[k][t];
  return out;
}

Decomposition apply_lattice_map(const Decomposition& d, const LatticeMap& map) {
  if (!(d.variety() == map.source))
    throw LatticeMismatch(map.name + " expects a decomposition on " + map.source.to_string() + ", got " +
                          d.variety().to_string());
  const Decomposition src = change_basis(d, map.source_basis);
  Decomposition out(map.target, map.target_basis, src.support_only());
  for (const auto& [s, m] : src.entries()) {
    if (!s.is_line()) throw Unsupported(map.name + " is only defined on line-bundle summands");
    Summand t = Summand::line(map.apply(s.coords()));
    if (m)
      out.add(t, *m);
    else
      out.add_support(t);
  }
  return out;
}

}  // namespace frobpush
