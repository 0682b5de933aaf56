#include "frobpush/serialize.hpp"

#include <memory>
#include <sstream>

#include "frobpush/errors.hpp"

namespace frobpush {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InvalidParameter(std::string("missing integer parameter '") + key + "'");
  return j.at(key).get<int>();
}

json cone_kind_to_json(const ConeKind& kind) {
  return std::visit(Overloaded{[](const RncCone& k) { return json{{"kind", "rnc"}, {"eps", k.eps}}; },
                               [](const VeroneseCone& k) {
                                 return json{{"kind", "veronese"}, {"d", k.d}, {"eps", k.eps}};
                               },
                               [](const SegreCone& k) { return json{{"kind", "segre"}, {"r", k.r}, {"s", k.s}}; }},
                    kind);
}

BigInt parse_big(const std::string& s) {
  BigInt out;
  if (s.empty() || out.set_str(s, 10) != 0) throw InvalidParameter("'" + s + "' is not a decimal integer");
  return out;
}

json summand_to_json(const Summand& s) {
  if (s.is_line()) return {{"kind", "line"}, {"class", s.coords()}};
  return {{"kind", "spinor"}, {"class", {{"j", s.spinor_index()}}}};
}

Summand summand_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "line") return Summand::line(j.at("class").get<Coords>());
  if (kind == "spinor") return Summand::spinor(j.at("class").at("j").get<std::int64_t>());
  throw InvalidParameter("unknown summand kind '" + kind + "'");
}

std::string multiplicity_string(const Multiplicity& m) { return m ? m->get_str() : "unknown"; }

std::string render_divisor(const Basis& basis, const Coords& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (c[k] < 0)
      os << "-";
    else if (!first)
      os << "+";
    const auto mag = c[k] < 0 ? -c[k] : c[k];
    if (mag != 1) os << mag;
    os << basis[k];
    first = false;
  }
  return os.str();
}

}  // namespace

json variety_to_json(const VarietyDescriptor& v) {
  json params = std::visit(
      Overloaded{[](const ProjSpace& x) { return json{{"d", x.d}}; },
                 [](const Product& x) { return json{{"r", x.r}, {"s", x.s}}; },
                 [](const SplitBundleTotalSpace& x) {
                   return json{{"base", variety_to_json(*x.base)}, {"twists", x.twists}};
                 },
                 [](const Hirzebruch& x) { return json{{"eps", x.eps}}; },
                 [](const LinearBlowup& x) { return json{{"d", x.d}, {"r", x.r}}; },
                 [](const VeroneseConeBlowup& x) { return json{{"d", x.d}, {"eps", x.eps}}; },
                 [](const SegreConeBlowup& x) { return json{{"r", x.r}, {"s", x.s}}; },
                 [](const Quadric& x) { return json{{"d", x.d}}; },
                 [](const ConeP& x) { return cone_kind_to_json(x.kind); }},
      v.value());
  return {{"tag", v.tag()}, {"params", params}};
}

VarietyDescriptor variety_from_json(const json& j) {
  const std::string tag = j.at("tag").get<std::string>();
  const json& p = j.at("params");
  if (tag == "projspace") return ProjSpace{get_int(p, "d")};
  if (tag == "product") return Product{get_int(p, "r"), get_int(p, "s")};
  if (tag == "split-bundle")
    return SplitBundleTotalSpace{std::make_shared<const VarietyDescriptor>(variety_from_json(p.at("base"))),
                                 p.at("twists").get<std::vector<Coords>>()};
  if (tag == "hirzebruch") return Hirzebruch{get_int(p, "eps")};
  if (tag == "blowup-linear") return LinearBlowup{get_int(p, "d"), get_int(p, "r")};
  if (tag == "veronese-cone") return VeroneseConeBlowup{get_int(p, "d"), get_int(p, "eps")};
  if (tag == "segre-cone") return SegreConeBlowup{get_int(p, "r"), get_int(p, "s")};
  if (tag == "quadric") return Quadric{get_int(p, "d")};
  if (tag == "cone-p") {
    const std::string kind = p.at("kind").get<std::string>();
    if (kind == "rnc") return ConeP{RncCone{get_int(p, "eps")}};
    if (kind == "veronese") return ConeP{VeroneseCone{get_int(p, "d"), get_int(p, "eps")}};
    if (kind == "segre") return ConeP{SegreCone{get_int(p, "r"), get_int(p, "s")}};
    throw InvalidParameter("unknown cone kind '" + kind + "'");
  }
  throw InvalidParameter("unknown variety tag '" + tag + "'");
}

json to_json(const Decomposition& d) {
  json summands = json::array();
  for (const auto& [s, m] : d.entries()) {
    json e = summand_to_json(s);
    e["mult"] = multiplicity_string(m);
    summands.push_back(std::move(e));
  }
  return {{"variety", variety_to_json(d.variety())},
          {"basis", d.basis()},
          {"summands", summands},
          {"rank", d.support_only() ? json(nullptr) : json(rank(d).get_str())}};
}

Decomposition decomposition_from_json(const json& j) {
  const VarietyDescriptor v = variety_from_json(j.at("variety"));
  const auto& summands = j.at("summands");
  bool support_only = j.at("rank").is_null();
  Decomposition out(v, j.at("basis").get<Basis>(), support_only);
  for (const auto& e : summands) {
    const Summand s = summand_from_json(e);
    const std::string m = e.at("mult").get<std::string>();
    if (m == "unknown")
      out.add_support(s);
    else
      out.add(s, parse_big(m));
  }
  if (!support_only && rank(out).get_str() != j.at("rank").get<std::string>())
    throw InvalidParameter("rank field does not match the summands");
  return out;
}

json to_json(const Verdict& v) {
  json witness = nullptr;
  if (v.witness)
    witness = {{"divisor", v.witness->divisor},
               {"summand", summand_to_json(v.witness->summand)},
               {"mult", multiplicity_string(v.witness->multiplicity)}};
  return {{"status", to_string(v.status)}, {"witness", witness}, {"notes", v.notes}};
}

Verdict verdict_from_json(const json& j) {
  Verdict out;
  out.status = verdict_status_from_string(j.at("status").get<std::string>());
  if (!j.at("witness").is_null()) {
    const json& w = j.at("witness");
    const std::string m = w.at("mult").get<std::string>();
    out.witness = Witness{w.at("divisor").get<std::string>(), summand_from_json(w.at("summand")),
                          m == "unknown" ? Multiplicity{} : Multiplicity{parse_big(m)}};
  }
  out.notes = j.at("notes").get<std::vector<std::string>>();
  return out;
}

json to_json(const Rational& r) {
  return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}, {"value", r.get_str()}};
}

std::string render_summand(const VarietyDescriptor& v, const Basis& basis, const Summand& s) {
  if (s.is_spinor()) return "S(" + std::to_string(s.spinor_index()) + ")";
  const Coords& c = s.coords();
  const bool zero = std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; });
  if (zero) return "O";
  if (v.is<ProjSpace>() || v.is<Quadric>()) return "O(" + std::to_string(c[0]) + ")";
  if (v.is<Product>()) return "O(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")";
  return "O(" + render_divisor(basis, c) + ")";
}

std::string render_text(const Decomposition& d) {
  std::ostringstream os;
  os << "variety: " << d.variety().to_string() << "\n";
  os << "basis:";
  for (const auto& b : d.basis()) os << " " << b;
  os << "\n";
  for (auto it = d.entries().rbegin(); it != d.entries().rend(); ++it)
    os << render_summand(d.variety(), d.basis(), it->first) << ": " << (it->second ? it->second->get_str() : "?")
       << "\n";
  os << "rank: " << (d.support_only() ? std::string("?") : rank(d).get_str()) << "\n";
  return os.str();
}

std::string render_text(const Verdict& v, const Decomposition& context) {
  std::ostringstream os;
  os << "verdict: " << to_string(v.status) << "\n";
  if (v.witness) {
    os << "witness: " << render_summand(context.variety(), context.basis(), v.witness->summand);
    if (v.witness->divisor.size()) os << " on " << v.witness->divisor;
    os << " (multiplicity " << (v.witness->multiplicity ? v.witness->multiplicity->get_str() : "?") << ")\n";
  }
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace frobpush
