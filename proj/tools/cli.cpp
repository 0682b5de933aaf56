#include "cli.hpp"

#include <CLI11.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "frobpush/catalog.hpp"
#include "frobpush/errors.hpp"
#include "frobpush/localalg.hpp"
#include "frobpush/positivity.hpp"
#include "frobpush/serialize.hpp"
#include "frobpush/verify.hpp"

namespace frobpush::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  std::string variety;
  std::string kind;
  int d = 0, r = 0, s = 0, eps = 0;
  CLI::Option* d_opt = nullptr;
  CLI::Option* r_opt = nullptr;
  CLI::Option* s_opt = nullptr;
  CLI::Option* eps_opt = nullptr;

  int need(CLI::Option* opt, int value, const char* name, const std::string& who) const {
    if (opt == nullptr || opt->count() == 0) throw UsageError(std::string("--") + name + " is required for " + who);
    return value;
  }
};

struct FieldFlags {
  int p = 0;
  int e = 1;
};

void add_family(CLI::App* cmd, FamilyFlags& f, bool with_variety) {
  if (with_variety)
    cmd->add_option("--variety", f.variety, "Catalog family")
        ->required()
        ->check(CLI::IsMember({"projspace", "product", "hirzebruch", "blowup-linear", "veronese-cone", "segre-cone",
                               "quadric", "cone-p"}));
  cmd->add_option("--kind", f.kind, "Cone kind for cone-p and local")
      ->check(CLI::IsMember({"rnc", "veronese", "segre"}));
  f.d_opt = cmd->add_option("--d", f.d, "Dimension parameter d");
  f.r_opt = cmd->add_option("--r", f.r, "Parameter r");
  f.s_opt = cmd->add_option("--s", f.s, "Parameter s");
  f.eps_opt = cmd->add_option("--eps", f.eps, "Parameter epsilon");
}

void add_field(CLI::App* cmd, FieldFlags& f) {
  cmd->add_option("--p", f.p, "Characteristic (a prime)")->required();
  cmd->add_option("--e", f.e, "Frobenius exponent")->capture_default_str();
}

CLI::Option* add_format(CLI::App* cmd, std::string& format) {
  return cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

ConeKind cone_from_flags(const FamilyFlags& f) {
  if (f.kind.empty()) throw UsageError("--kind is required for cone computations");
  if (f.kind == "rnc") return RncCone{f.need(f.eps_opt, f.eps, "eps", "rnc")};
  if (f.kind == "veronese") return VeroneseCone{f.need(f.d_opt, f.d, "d", "veronese"), f.need(f.eps_opt, f.eps, "eps", "veronese")};
  return SegreCone{f.need(f.r_opt, f.r, "r", "segre"), f.need(f.s_opt, f.s, "s", "segre")};
}

VarietyDescriptor variety_from_flags(const FamilyFlags& f) {
  const std::string& v = f.variety;
  if (v == "projspace") return ProjSpace{f.need(f.d_opt, f.d, "d", v)};
  if (v == "product") return Product{f.need(f.r_opt, f.r, "r", v), f.need(f.s_opt, f.s, "s", v)};
  if (v == "hirzebruch") return Hirzebruch{f.need(f.eps_opt, f.eps, "eps", v)};
  if (v == "blowup-linear") return LinearBlowup{f.need(f.d_opt, f.d, "d", v), f.need(f.r_opt, f.r, "r", v)};
  if (v == "veronese-cone") return VeroneseConeBlowup{f.need(f.d_opt, f.d, "d", v), f.need(f.eps_opt, f.eps, "eps", v)};
  if (v == "segre-cone") return SegreConeBlowup{f.need(f.r_opt, f.r, "r", v), f.need(f.s_opt, f.s, "s", v)};
  if (v == "quadric") return Quadric{f.need(f.d_opt, f.d, "d", v)};
  return ConeP{cone_from_flags(f)};
}

std::vector<std::int64_t> parse_ints(const std::string& text, const char* flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw UsageError(std::string("--") + flag + " expects comma-separated integers, got '" + text + "'");
  }
  if (out.empty()) throw UsageError(std::string("--") + flag + " is empty");
  return out;
}

Coords bundle_coords(const std::string& bundle, std::size_t arity, const std::string& variety) {
  if (bundle.empty()) return Coords(arity, 0);
  Coords c = parse_ints(bundle, "bundle");
  if (c.size() != arity)
    throw InvalidParameter("--bundle for " + variety + " needs " + std::to_string(arity) + " coordinates, got " +
                           std::to_string(c.size()));
  return c;
}

Decomposition decompose(const VarietyDescriptor& v, const std::string& bundle, const FieldParams& fp) {
  const std::string tag = v.tag();
  if (const auto* x = v.get_if<ProjSpace>()) return pf_projspace(x->d, bundle_coords(bundle, 1, tag)[0], fp);
  if (const auto* x = v.get_if<Product>()) {
    const Coords c = bundle_coords(bundle, 2, tag);
    return pf_product(x->r, x->s, c[0], c[1], fp);
  }
  if (const auto* x = v.get_if<Hirzebruch>()) {
    const Coords c = bundle_coords(bundle, 2, tag);
    return pf_hirzebruch(x->eps, c[0], c[1], fp);
  }
  if (const auto* x = v.get_if<VeroneseConeBlowup>()) {
    const Coords c = bundle_coords(bundle, 2, tag);
    if (c == Coords{0, 0}) return pf_structure_sheaf(v, fp);
    return pf_veronese_cone_unpartitioned(x->d, x->eps, c[0], c[1], fp);
  }
  if (const auto* x = v.get_if<SegreConeBlowup>()) {
    const Coords c = bundle_coords(bundle, 3, tag);
    return pf_segre_cone(x->r, x->s, c[0], c[1], c[2], fp);
  }
  if (!bundle.empty() && bundle_coords(bundle, v.default_basis().size(), tag) != Coords(v.default_basis().size(), 0))
    throw Unsupported("only the structure sheaf is available on " + v.to_string());
  if (v.is<LinearBlowup>()) return pf_structure_sheaf(v, fp);
  if (const auto* x = v.get_if<Quadric>()) return quadric_support(x->d, fp);
  return cone_pushforward(v.get_if<ConeP>()->kind, fp);
}

struct KernelResult {
  Decomposition kernel;
  Verdict verdict;
};

KernelResult kernel(const VarietyDescriptor& v, const FieldParams& fp) {
  if (const auto* x = v.get_if<Quadric>()) {
    QuadricReport r = quadric_ee_verdict(x->d, fp);
    return {r.kernel_support, r.verdict};
  }
  if (v.is<ConeP>()) throw Unsupported("the trace kernel is defined on smooth varieties, not on " + v.to_string());
  Decomposition k = trace_kernel(v, fp);
  if (v.is<ProjSpace>() || v.is<Product>()) return {k, ample_verdict(k)};
  return {k, ee_verdict_via_restriction(v, fp)};
}

std::string rational_text(const Rational& r) { return r.get_str(); }

int cmd_decompose(const FamilyFlags& fam, const FieldFlags& fld, const std::string& bundle, const std::string& format,
                  std::ostream& out) {
  const VarietyDescriptor v = variety_from_flags(fam);
  const FieldParams fp(fld.p, fld.e);
  const Decomposition d = decompose(v, bundle, fp);
  if (format == "json")
    out << to_json(d).dump(2) << "\n";
  else {
    out << render_text(d);
    if (v.is<Quadric>()) out << "note: summands of F^e_* omega^{1-q}; only O has a known multiplicity\n";
  }
  return kOk;
}

int cmd_kernel(const FamilyFlags& fam, const FieldFlags& fld, const std::string& format, std::ostream& out) {
  const VarietyDescriptor v = variety_from_flags(fam);
  const FieldParams fp(fld.p, fld.e);
  const KernelResult r = kernel(v, fp);
  if (format == "json")
    out << json{{"kernel", to_json(r.kernel)}, {"verdict", to_json(r.verdict)}}.dump(2) << "\n";
  else
    out << render_text(r.kernel) << render_text(r.verdict, r.kernel);
  return kOk;
}

int cmd_local(const FamilyFlags& fam, const FieldFlags& fld, int upto, const std::string& format, std::ostream& out) {
  const ConeKind kind = cone_from_flags(fam);
  const VarietyDescriptor cone = ConeP{kind};
  const FieldParams fp(fld.p, fld.e);
  const BigInt sn = splitting_number(kind, fp);
  const Rational conv = f_signature_convergent(kind, fp);
  const Rational sig = f_signature(kind);

  // Convergence table over e = 1..upto.
  std::vector<std::pair<int, Rational>> table;
  for (int e = 1; e <= upto; ++e) table.emplace_back(e, f_signature_convergent(kind, FieldParams(fld.p, e)));

  if (format == "json") {
    json j{{"cone", variety_to_json(cone)},
           {"p", fld.p},
           {"e", fld.e},
           {"splitting", sn.get_str()},
           {"convergent", to_json(conv)},
           {"signature", to_json(sig)}};
    if (!table.empty()) {
      json rows = json::array();
      for (const auto& [e, c] : table) {
        Rational err = c - sig;
        rows.push_back({{"e", e}, {"convergent", to_json(c)}, {"error", to_json(err)}});
      }
      j["convergence"] = rows;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "cone: " << cone.to_string() << "\n";
  out << "splitting: " << sn.get_str() << "\n";
  out << "convergent: " << rational_text(conv) << "\n";
  out << "signature: " << rational_text(sig) << "\n";
  if (!table.empty()) {
    out << "e\tconvergent\terror\n";
    for (const auto& [e, c] : table) {
      Rational err = c - sig;
      out << e << "\t" << rational_text(c) << "\t" << rational_text(err) << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const std::string& suite, VerifyOptions opts, const std::string& primes, const std::string& format,
               std::ostream& out) {
  opts.primes.clear();
  for (auto p : parse_ints(primes, "primes")) opts.primes.push_back(static_cast<int>(p));
  if (opts.jobs < 1) throw UsageError("--jobs must be >= 1");
  const auto results = run_suite(suite, opts);
  int fails = 0, warns = 0;
  for (const auto& r : results) {
    if (r.outcome == CheckOutcome::Fail) ++fails;
    if (r.outcome == CheckOutcome::Warn) ++warns;
  }
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"suite", r.suite}, {"key", r.key}, {"outcome", to_string(r.outcome)}, {"detail", r.detail}});
    out << json{{"results", rows}, {"failed", fails}, {"warnings", warns}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << to_string(r.outcome) << "  " << r.suite << "  " << r.key;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << "\n";
    }
    out << results.size() << " checks, " << fails << " failed, " << warns << " warnings\n";
  }
  return fails == 0 ? kOk : kDomainError;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Frobenius pushforward decompositions", "frobpush"};
  app.require_subcommand(1);

  FamilyFlags dec_fam, ker_fam, loc_fam;
  FieldFlags fld;
  std::string format = "text";
  std::string bundle;
  int upto = 0;
  std::string suite = "all";
  std::string primes = "2,3,5";
  VerifyOptions vopts;

  auto* dec = app.add_subcommand("decompose", "Decompose F^e_* of a line bundle");
  add_family(dec, dec_fam, true);
  dec->add_option("--bundle", bundle, "Bundle coordinates: n, u,v, or n,n1,n2");
  add_field(dec, fld);
  add_format(dec, format);

  auto* ker = app.add_subcommand("kernel", "Trace kernel E_e and its positivity verdict");
  add_family(ker, ker_fam, true);
  add_field(ker, fld);
  add_format(ker, format);

  auto* loc = app.add_subcommand("local", "Splitting number and F-signature of a cone");
  add_family(loc, loc_fam, false);
  add_field(loc, fld);
  loc->add_option("--upto", upto, "Also tabulate convergents for e = 1..N");
  add_format(loc, format);

  auto* ver = app.add_subcommand("verify", "Run the invariant suites");
  ver->add_option("--suite", suite, "identities, oracles, fixtures, tensions or all")->capture_default_str();
  ver->add_option("--max-d", vopts.max_d, "Largest dimension")->capture_default_str();
  ver->add_option("--max-e", vopts.max_e, "Largest Frobenius exponent")->capture_default_str();
  ver->add_option("--primes", primes, "Comma-separated primes")->capture_default_str();
  ver->add_option("--jobs", vopts.jobs, "Worker threads")->capture_default_str();
  add_format(ver, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
    return kUsageError;
  }

  try {
    if (dec->parsed()) return cmd_decompose(dec_fam, fld, bundle, format, out);
    if (ker->parsed()) return cmd_kernel(ker_fam, fld, format, out);
    if (loc->parsed()) return cmd_local(loc_fam, fld, upto, format, out);
    return cmd_verify(suite, vopts, primes, format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const OutOfRegime& e) {
    err << "out of regime: " << e.what() << "\n";
    return kOutOfRegime;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace frobpush::cli
