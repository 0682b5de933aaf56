#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace frobpush {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Characteristic p, Frobenius exponent e and q = p^e.
class FieldParams {
 public:
  /// Throws InvalidParameter unless p is prime and e >= 1.
  FieldParams(int p, int e);

  int p() const { return p_; }
  int e() const { return e_; }
  const BigInt& q() const { return q_; }

  /// q as a machine integer, for loops over residues.  Throws OutOfRegime
  /// when q does not fit comfortably in 32 bits.
  std::int64_t q_int() const;

  friend bool operator==(const FieldParams& a, const FieldParams& b) {
    return a.p_ == b.p_ && a.e_ == b.e_;
  }

 private:
  int p_;
  int e_;
  BigInt q_;
};

bool is_prime(int n);

/// n = floor_part * q + residue with 0 <= residue < q.
struct EuclidPair {
  std::int64_t floor_part;
  std::int64_t residue;
  friend bool operator==(const EuclidPair&, const EuclidPair&) = default;
};

EuclidPair euclid(std::int64_t n, std::int64_t q);

inline std::int64_t floor_div(std::int64_t n, std::int64_t q) { return euclid(n, q).floor_part; }
inline std::int64_t residue(std::int64_t n, std::int64_t q) { return euclid(n, q).residue; }

/// C(n, k), zero whenever k < 0, n < 0 or k > n.
BigInt binom(const BigInt& n, std::int64_t k);
BigInt binom(std::int64_t n, std::int64_t k);

BigInt factorial(unsigned n);
BigInt pow(const BigInt& base, unsigned exponent);

/// Number of (d+1)-tuples in [0, q-1] summing to m + i q, evaluated through
/// the signed binomial sum.  Zero for i < 0.
BigInt a_mult(std::int64_t i, std::int64_t m, int d, const FieldParams& fp);

/// Same count for an arbitrary modulus q >= 1 (not necessarily a prime power).
BigInt a_mult_q(std::int64_t i, std::int64_t m, int d, const BigInt& q);

/// Independent count of the same tuples by dynamic programming over the parts.
BigInt a_mult_oracle(std::int64_t i, std::int64_t m, int d, const FieldParams& fp);

/// Eulerian number A(d, i) = sum_j (-1)^j C(d+1, j) (i-j)^d.
BigInt eulerian(int d, std::int64_t i);

/// sum_{i=0}^{d} a(i, m; d) == q^d.
bool check_sum_identity(std::int64_t m, int d, const FieldParams& fp);

/// sum_{j<q} a(l-1, j; d-1) == a(l, 0; d) - a(l, 0; d-1) + a(l-1, 0; d-1).
bool check_tricky_sum(int l, int d, const FieldParams& fp);

}  // namespace frobpush
