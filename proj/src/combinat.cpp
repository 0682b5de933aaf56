#include "frobpush/combinat.hpp"

#include <string>

#include "frobpush/errors.hpp"

namespace frobpush {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; static_cast<long>(k) * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

FieldParams::FieldParams(int p, int e) : p_(p), e_(e) {
  if (!is_prime(p)) throw InvalidParameter("p must be prime, got p=" + std::to_string(p));
  if (e < 1) throw InvalidParameter("e must be >= 1, got e=" + std::to_string(e));
  mpz_ui_pow_ui(q_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
}

std::int64_t FieldParams::q_int() const {
  if (q_ > BigInt(1L << 30))
    throw OutOfRegime("q = " + q_.get_str() + " is too large for residue enumeration (q <= 2^30)");
  return q_.get_si();
}

EuclidPair euclid(std::int64_t n, std::int64_t q) {
  if (q <= 0) throw InvalidParameter("euclid requires q >= 1, got q=" + std::to_string(q));
  std::int64_t f = n / q;
  std::int64_t r = n % q;
  if (r < 0) {
    r += q;
    --f;
  }
  return {f, r};
}

BigInt binom(const BigInt& n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

BigInt binom(std::int64_t n, std::int64_t k) { return binom(BigInt(static_cast<long>(n)), k); }

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

namespace {

void check_residue(std::int64_t m, const BigInt& q) {
  if (m < 0 || BigInt(static_cast<long>(m)) >= q)
    throw InvalidParameter("m must lie in [0, q-1], got m=" + std::to_string(m) +
                           " with q=" + q.get_str());
}

}  // namespace

BigInt a_mult_q(std::int64_t i, std::int64_t m, int d, const BigInt& q) {
  if (d < 0) throw InvalidParameter("dimension d must be >= 0");
  check_residue(m, q);
  if (i < 0) return 0;
  // Past the top degree (d+1)(q-1) the signed sum vanishes on its own, but
  // only after cancelling huge terms; short-circuit it.
  if (i > d + 1) return 0;
  BigInt total = 0;
  for (std::int64_t j = 0; j <= i; ++j) {
    BigInt term = binom(static_cast<std::int64_t>(d + 1), i - j) * binom(BigInt(static_cast<long>(j)) * q + m + d, d);
    if ((i - j) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

BigInt a_mult(std::int64_t i, std::int64_t m, int d, const FieldParams& fp) {
  return a_mult_q(i, m, d, fp.q());
}

BigInt a_mult_oracle(std::int64_t i, std::int64_t m, int d, const FieldParams& fp) {
  if (d < 0) throw InvalidParameter("dimension d must be >= 0");
  check_residue(m, fp.q());
  const std::int64_t q = fp.q_int();
  const std::int64_t target = m + i * q;
  const std::int64_t top = static_cast<std::int64_t>(d + 1) * (q - 1);
  if (target < 0 || target > top) return 0;

  // ways[s] = number of tuples with the parts placed so far summing to s.
  std::vector<BigInt> ways(static_cast<std::size_t>(target + 1), 0);
  ways[0] = 1;
  for (int part = 0; part <= d; ++part) {
    std::vector<BigInt> next(ways.size(), 0);
    BigInt window = 0;  // sum of ways[s-q+1 .. s]
    for (std::int64_t s = 0; s <= target; ++s) {
      window += ways[static_cast<std::size_t>(s)];
      if (s - q >= 0) window -= ways[static_cast<std::size_t>(s - q)];
      next[static_cast<std::size_t>(s)] = window;
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(target)];
}

BigInt eulerian(int d, std::int64_t i) {
  if (d < 1) throw InvalidParameter("eulerian requires d >= 1");
  BigInt total = 0;
  for (std::int64_t j = 0; j <= i; ++j) {
    BigInt term = binom(static_cast<std::int64_t>(d + 1), j) * pow(BigInt(static_cast<long>(i - j)), static_cast<unsigned>(d));
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

bool check_sum_identity(std::int64_t m, int d, const FieldParams& fp) {
  BigInt total = 0;
  for (int i = 0; i <= d; ++i) total += a_mult(i, m, d, fp);
  return total == pow(fp.q(), static_cast<unsigned>(d));
}

bool check_tricky_sum(int l, int d, const FieldParams& fp) {
  if (d < 1 || l < 1 || l > d)
    throw InvalidParameter("tricky sum needs 1 <= l <= d, got l=" + std::to_string(l) +
                           ", d=" + std::to_string(d));
  const std::int64_t q = fp.q_int();
  BigInt lhs = 0;
  for (std::int64_t j = 0; j < q; ++j) lhs += a_mult(l - 1, j, d - 1, fp);
  BigInt rhs = a_mult(l, 0, d, fp) - a_mult(l, 0, d - 1, fp) + a_mult(l - 1, 0, d - 1, fp);
  return lhs == rhs;
}

}  // namespace frobpush
