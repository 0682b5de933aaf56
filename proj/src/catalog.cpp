#include "frobpush/catalog.hpp"

#include <memory>
#include <string>

#include "frobpush/errors.hpp"

namespace frobpush {

namespace {

BigInt big(std::int64_t x) { return BigInt(static_cast<long>(x)); }

Coords add_scaled(Coords c, const Coords& v, std::int64_t t) {
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += t * v[k];
  return c;
}

}  // namespace

Decomposition pf_projspace(int d, std::int64_t n, const FieldParams& fp) {
  Decomposition out(ProjSpace{d});
  const auto [k, m] = euclid(n, fp.q_int());
  for (int i = 0; i <= d; ++i) out.add(Coords{k - i}, a_mult(i, m, d, fp));
  return out;
}

Decomposition pf_product(int r, int s, std::int64_t u, std::int64_t v, const FieldParams& fp) {
  Decomposition out(Product{r, s});
  const std::int64_t q = fp.q_int();
  const auto [k, m] = euclid(u, q);
  const auto [l, n] = euclid(v, q);
  for (int i = 0; i <= r; ++i) {
    const BigInt ai = a_mult(i, m, r, fp);
    if (ai == 0) continue;
    for (int j = 0; j <= s; ++j) out.add(Coords{k - i, l - j}, ai * a_mult(j, n, s, fp));
  }
  return out;
}

Decomposition pf_base(const VarietyDescriptor& base, const Coords& c, const FieldParams& fp) {
  if (c.size() != base.default_basis().size())
    throw LatticeMismatch("class does not live on " + base.to_string());
  if (const auto* ps = base.get_if<ProjSpace>()) return pf_projspace(ps->d, c[0], fp);
  if (const auto* pr = base.get_if<Product>()) return pf_product(pr->r, pr->s, c[0], c[1], fp);
  throw Unsupported("base pushforwards are only available on projective spaces and their products");
}

std::vector<PullbackRequest> pf_split_bundle_total_space(const std::vector<Coords>& twists, const Coords& n_class,
                                                         const FieldParams& fp) {
  if (twists.empty()) throw InvalidParameter("split bundle needs at least one twist");
  const std::int64_t q = fp.q_int();
  std::map<Coords, BigInt> acc{{n_class, 1}};
  for (const auto& l : twists) {
    if (l.size() != n_class.size()) throw LatticeMismatch("twist and N live on different lattices");
    std::map<Coords, BigInt> next;
    for (const auto& [c, w] : acc)
      for (std::int64_t i = 0; i < q; ++i) next[add_scaled(c, l, i)] += w;
    acc = std::move(next);
  }
  std::vector<PullbackRequest> out;
  out.reserve(acc.size());
  for (auto& [c, w] : acc) out.push_back({c, w});
  return out;
}

Decomposition resolve_total_space(const VarietyDescriptor& base, const std::vector<Coords>& twists,
                                  const Coords& n_class, const FieldParams& fp) {
  VarietyDescriptor total = SplitBundleTotalSpace{std::make_shared<const VarietyDescriptor>(base), twists};
  Decomposition out(total, base.default_basis());
  for (const auto& req : pf_split_bundle_total_space(twists, n_class, fp)) {
    const Decomposition pushed = pf_base(base, req.base_class, fp);
    for (const auto& [s, m] : pushed.entries()) out.add(s, *m * req.copies);
  }
  return out;
}

std::map<Coords, BigInt> pf_split_projective_bundle(const VarietyDescriptor& base, const std::vector<Coords>& twists,
                                                    std::int64_t n, const Coords& n_class, const FieldParams& fp) {
  if (twists.empty()) throw InvalidParameter("projective bundle needs at least one twist");
  const std::int64_t q = fp.q_int();
  const auto [k, m] = euclid(n, q);

  // (exponent sum, base class) -> number of exponent tuples.
  std::map<std::pair<std::int64_t, Coords>, BigInt> acc{{{0, n_class}, 1}};
  for (const auto& l : twists) {
    if (l.size() != n_class.size()) throw LatticeMismatch("twist and N live on different lattices");
    std::map<std::pair<std::int64_t, Coords>, BigInt> next;
    for (const auto& [key, w] : acc)
      for (std::int64_t i = 0; i < q; ++i) next[{key.first + i, add_scaled(key.second, l, i)}] += w;
    acc = std::move(next);
  }

  std::map<Coords, BigInt> out;
  for (const auto& [key, w] : acc) {
    const auto [i, rest] = euclid(key.first - m, q);
    if (rest != 0) continue;
    const Decomposition pushed = pf_base(base, key.second, fp);
    for (const auto& [s, mult] : pushed.entries()) {
      Coords c{k - i};
      c.insert(c.end(), s.coords().begin(), s.coords().end());
      out[c] += *mult * w;
    }
  }
  return out;
}

Decomposition pf_hirzebruch(int eps, std::int64_t u, std::int64_t v, const FieldParams& fp) {
  Decomposition out(Hirzebruch{eps});
  const std::int64_t q = fp.q_int();
  const auto [k, m] = euclid(u, q);
  for (std::int64_t j = 0; j < q; ++j) {
    const auto [fl, res] = euclid(v - j * eps, q);
    const std::int64_t c0 = j <= m ? k : k - 1;
    out.add(Coords{c0, fl}, big(res + 1));
    out.add(Coords{c0, fl - 1}, big(q - 1 - res));
  }
  return out;
}

std::vector<BigInt> hirzebruch_sigma_blocks(int eps, const FieldParams& fp) {
  const Decomposition d = pf_hirzebruch(eps, 0, 0, fp);
  std::vector<BigInt> sigma;
  for (int i = 1; i <= eps + 1; ++i) sigma.push_back(d.known_multiplicity(Summand::line({-1, -i})));
  return sigma;
}

std::vector<BigInt> hirzebruch_sigma_closed(int eps, const FieldParams& fp) {
  if (eps < 1) throw InvalidParameter("sigma closed forms need eps >= 1");
  const BigInt& q = fp.q();
  if (q < eps)
    throw OutOfRegime("sigma closed forms need q >= eps (q=" + q.get_str() + ", eps=" + std::to_string(eps) + ")");
  const BigInt k = q % eps;
  const long e = eps;
  auto rho = [&](long l) -> BigInt {
    if (l == e) return e;
    return (k * l) % e;
  };
  auto exact = [](Rational x) {
    x.canonicalize();
    if (x.get_den() != 1) throw Error("sigma closed form is not integral: " + x.get_str());
    return BigInt(x.get_num());
  };

  std::vector<BigInt> sigma;
  const BigInt r1 = rho(1);
  sigma.push_back(exact(Rational((q - r1) * (q + r1 - e + 2), 2 * e)));
  for (long i = 2; i <= e; ++i) {
    const BigInt a = rho(i), b = rho(i - 1), c = rho(i - 2);
    const BigInt twice_corr = a * a - 2 * b * b + c * c - (e - 2) * (a - 2 * b + c);
    sigma.push_back(exact((Rational(q * q) - Rational(twice_corr, 2)) / e));
  }
  const BigInt rl = rho(e - 1);
  sigma.push_back(exact(Rational((q - e + rl) * (q - rl - 2), 2 * e)));
  return sigma;
}

BigInt blowup_b(int d, int r, std::int64_t i, std::int64_t k, const FieldParams& fp) {
  const std::int64_t q = fp.q_int();
  BigInt total = a_mult(k, 0, d - r, fp) * a_mult(i, 0, r - 1, fp);
  if (i >= 1)
    for (std::int64_t j = 1; j < q; ++j) total += a_mult(k, j, d - r, fp) * a_mult(i - 1, q - j, r - 1, fp);
  return total;
}

Decomposition pf_linear_blowup(int d, int r, const FieldParams& fp) {
  Decomposition out(LinearBlowup{d, r});
  for (int i = 0; i <= r; ++i)
    for (int k = 0; k <= d - r; ++k) out.add(Coords{-i, -k}, blowup_b(d, r, i, k, fp));
  return out;
}

BigInt VeroneseBlocks::varsigma_at(std::int64_t k) const {
  auto it = varsigma.find(k);
  return it == varsigma.end() ? BigInt(0) : it->second;
}

BigInt VeroneseBlocks::sigma_at(std::int64_t k) const {
  auto it = sigma.find(k);
  return it == sigma.end() ? BigInt(0) : it->second;
}

VeroneseBlocks veronese_blocks(int d, int eps, std::int64_t n, std::int64_t n_prime, const FieldParams& fp) {
  VarietyDescriptor{VeroneseConeBlowup{d, eps}};  // validates d and eps
  const std::int64_t q = fp.q_int();
  if (n < 0 || n >= q || n_prime < 0 || n_prime >= q)
    throw InvalidParameter("Veronese block sums need 0 <= n, n' <= q-1");
  if (!(q >= eps - n_prime && eps - n_prime >= 1))
    throw OutOfRegime("Veronese partitions need q >= eps - n' >= 1 (q=" + std::to_string(q) +
                      ", eps=" + std::to_string(eps) + ", n'=" + std::to_string(n_prime) + ")");

  VeroneseBlocks out;
  for (int i = 1; i <= eps; ++i) {
    const std::int64_t ilo = floor_div((i - 1) * q - 1 - n_prime, eps) + 1;
    const std::int64_t ihi = i < eps ? floor_div(i * q - 1 - n_prime, eps) : q - 1;
    const std::int64_t jlo = floor_div((i - 1) * q + n_prime, eps) + 1;
    const std::int64_t jhi = i < eps ? floor_div(i * q + n_prime, eps) : q - 1;
    out.I.emplace_back(ilo, ihi);
    out.J.emplace_back(jlo, jhi);
  }

  auto find_block = [](const auto& ranges, std::int64_t x) {
    for (std::size_t i = 0; i < ranges.size(); ++i)
      if (ranges[i].first <= x && x <= ranges[i].second) return static_cast<int>(i) + 1;
    return 0;
  };
  out.i_n = find_block(out.I, n);
  out.i_n_prime = q - 1 - n == 0 ? -1 : find_block(out.J, q - 1 - n);
  if (out.i_n == 0 || (out.i_n_prime == 0))
    throw OutOfRegime("Veronese partitions do not cover the residues for these parameters");

  for (int i = 1; i <= eps; ++i) {
    const auto [ilo, ihi] = out.I[static_cast<std::size_t>(i - 1)];
    const auto [jlo, jhi] = out.J[static_cast<std::size_t>(i - 1)];
    for (int l = 0; l <= d; ++l) {
      BigInt vs = 0;
      for (std::int64_t j = std::max<std::int64_t>(ilo, 0); j <= std::min(ihi, n); ++j) {
        const std::int64_t res = eps * j + n_prime - (i - 1) * q;
        if (res < 0 || res >= q) throw OutOfRegime("I-partition residue left [0, q-1]");
        vs += a_mult(l, res, d, fp);
      }
      if (vs != 0) out.varsigma[l - i + 1] += vs;

      BigInt sg = 0;
      for (std::int64_t j = std::max<std::int64_t>(jlo, 1); j <= std::min(jhi, q - 1 - n); ++j) {
        const std::int64_t res = i * q - eps * j + n_prime;
        if (res < 0 || res >= q) throw OutOfRegime("J-partition residue left [0, q-1]");
        sg += a_mult(l, res, d, fp);
      }
      if (sg != 0) out.sigma[i + l] += sg;
    }
  }
  return out;
}

Decomposition pf_veronese_cone(int d, int eps, std::int64_t n, std::int64_t n_prime, const FieldParams& fp) {
  const VeroneseBlocks blocks = veronese_blocks(d, eps, n, n_prime, fp);
  Decomposition out(VeroneseConeBlowup{d, eps});
  for (const auto& [k, m] : blocks.varsigma) out.add(Coords{0, -k}, m);
  // -E - kH' = -H + (eps - k)H'.
  for (const auto& [k, m] : blocks.sigma) out.add(Coords{-1, eps - k}, m);
  return out;
}

Decomposition pf_veronese_cone_unpartitioned(int d, int eps, std::int64_t n, std::int64_t n_prime,
                                             const FieldParams& fp) {
  Decomposition out(VeroneseConeBlowup{d, eps});
  const std::int64_t q = fp.q_int();
  const auto [k, m] = euclid(n, q);
  for (std::int64_t j = 0; j < q; ++j) {
    const std::int64_t h = j <= m ? k : k - 1;
    const auto [fl, res] = euclid(eps * j + n_prime, q);
    for (int l = 0; l <= d; ++l) out.add(Coords{h, fl - l}, a_mult(l, res, d, fp));
  }
  return out;
}

BigInt segre_sigma(int r, int s, std::int64_t k, std::int64_t l, const FieldParams& fp) {
  const std::int64_t q = fp.q_int();
  BigInt total = 0;
  for (std::int64_t j = 1; j < q; ++j) total += a_mult(k, j, r, fp) * a_mult(l, j, s, fp);
  return total;
}

Decomposition pf_segre_cone(int r, int s, std::int64_t n, std::int64_t n1, std::int64_t n2, const FieldParams& fp) {
  Decomposition out(SegreConeBlowup{r, s});
  const std::int64_t q = fp.q_int();
  const auto [k, m] = euclid(n, q);
  for (std::int64_t j = 0; j < q; ++j) {
    const std::int64_t h = j <= m ? k : k - 1;
    const auto [f1, r1] = euclid(j + n1, q);
    const auto [f2, r2] = euclid(j + n2, q);
    for (int a = 0; a <= r; ++a) {
      const BigInt x = a_mult(a, r1, r, fp);
      if (x == 0) continue;
      for (int b = 0; b <= s; ++b) out.add(Coords{h, f1 - a, f2 - b}, x * a_mult(b, r2, s, fp));
    }
  }
  return out;
}

Decomposition pf_structure_sheaf(const VarietyDescriptor& v, const FieldParams& fp) {
  if (const auto* x = v.get_if<ProjSpace>()) return pf_projspace(x->d, 0, fp);
  if (const auto* x = v.get_if<Product>()) return pf_product(x->r, x->s, 0, 0, fp);
  if (const auto* x = v.get_if<Hirzebruch>()) return pf_hirzebruch(x->eps, 0, 0, fp);
  if (const auto* x = v.get_if<LinearBlowup>()) return pf_linear_blowup(x->d, x->r, fp);
  if (const auto* x = v.get_if<VeroneseConeBlowup>()) {
    if (fp.q() >= x->eps) return pf_veronese_cone(x->d, x->eps, 0, 0, fp);
    return pf_veronese_cone_unpartitioned(x->d, x->eps, 0, 0, fp);
  }
  if (const auto* x = v.get_if<SegreConeBlowup>()) return pf_segre_cone(x->r, x->s, 0, 0, 0, fp);
  throw Unsupported("F^e_* O is not split into line bundles on " + v.to_string());
}

bool quadric_line_present(int d, std::int64_t i, const FieldParams& fp) {
  // 0 <= d(q-1) - iq <= d(q-1)
  const BigInt& q = fp.q();
  return i >= 0 && big(i) * q <= BigInt(d) * (q - 1);
}

bool quadric_spinor_present(int d, std::int64_t j, const FieldParams& fp) {
  const BigInt& q = fp.q();
  const BigInt qp = q / fp.p();  // p^{e-1}
  const BigInt jj = big(j);
  if (fp.p() != 2) {
    // Both sides of the range doubled so that d/2 stays integral.
    const BigInt lo = BigInt(d) * (q - qp) - 2 * q + 2 * qp;
    const BigInt mid = 2 * BigInt(d) * (q - 1) - 2 * jj * q;
    const BigInt hi = BigInt(d) * (q - qp) - 2 * qp + 2 * BigInt(d) * (qp - 1);
    return lo <= mid && mid <= hi;
  }
  const BigInt h = BigInt(d / 2 - 1) * qp;
  const BigInt mid = BigInt(d) * (q - 1) - jj * q;
  return h <= mid && mid <= BigInt(d) * (q - 1) - q - h;
}

Decomposition quadric_support(int d, const FieldParams& fp) {
  if (d < 3) throw OutOfRegime("quadric support needs d >= 3; Q^1 and Q^2 are P^1 and P^1 x P^1");
  Decomposition out(Quadric{d}, Basis{"O(1)"}, true);
  for (std::int64_t i = 0; i <= d; ++i) {
    if (!quadric_line_present(d, i, fp)) continue;
    if (i == 0)
      out.add(Summand::line({0}), 1);
    else
      out.add_support(Summand::line({i}));
  }
  for (std::int64_t j = -2 * d - 2; j <= 2 * d + 2; ++j)
    if (quadric_spinor_present(d, j, fp)) out.add_support(Summand::spinor(j));
  return out;
}

}  // namespace frobpush
