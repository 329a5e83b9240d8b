#ifndef PERMSOLV_NUMTH_HPP
#define PERMSOLV_NUMTH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace permsolv {

/// n = prod p^e over `factors`.
struct Factorization {
  std::uint64_t n = 1;
  std::map<std::uint64_t, unsigned> factors;

  std::vector<std::uint64_t> primes() const;
  /// Largest power of p dividing n (1 when p does not divide n).
  std::uint64_t part(std::uint64_t p) const;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Trial division; valid for 1 <= n <= 2^63-1.
Factorization factorize(std::uint64_t n);

/// If n = p^k with k >= 1, returns p.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

/// True for n = p^k, k >= 0 (so 1 is a p-power for every p).
bool is_power_of(std::uint64_t n, std::uint64_t p);

/// Multiplicative order of a modulo m (gcd(a, m) = 1, m >= 2).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// a^e mod m without overflow.
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// base^exp, throwing std::overflow_error beyond the signed 64-bit range.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Primes r dividing q^e - 1 but no q^i - 1 with 0 < i < e, ascending.
/// Throws std::overflow_error when q^e leaves the signed 64-bit range.
std::vector<std::uint64_t> primitive_prime_divisors(std::uint64_t q,
                                                    unsigned e);

/// q + 1 is a power of two and q is prime.
bool is_mersenne_prime(std::uint64_t q);

/// The cases q^e - 1 (q >= 2, e >= 2) without a primitive prime divisor:
/// q a Mersenne prime with e = 2, or (q, e) = (2, 6).
bool zsigmondy_exception(std::uint64_t q, unsigned e);

/// Prime pair (p, q) for A_n, n >= 5: q is the largest prime <= n; p is the
/// smallest prime > n/2, except p = 3 for n = 6 and p = 5 for n = 10.
std::pair<std::uint64_t, std::uint64_t> alt_prime_selection(std::uint64_t n);

/// Sieve of Eratosthenes with prefix prime counts on [0, limit].
class PrimeSieve {
public:
  explicit PrimeSieve(std::uint64_t limit);
  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const { return composite_[n] == 0; }
  /// Number of primes <= n; n <= limit().
  std::uint64_t pi(std::uint64_t n) const { return prefix_[n]; }

private:
  std::uint64_t limit_;
  std::vector<std::uint8_t> composite_;
  std::vector<std::uint32_t> prefix_;
};

struct PrimeGapRecord {
  std::uint64_t m = 0;
  std::uint64_t pi_2m = 0;
  std::uint64_t pi_m = 0;
  double bound = 0; ///< m / (3 ln 2m)
  bool satisfied = false;
};

/// Exact pi(2m) - pi(m) against m / (3 ln 2m). Throws std::invalid_argument
/// for m < 2 and CapExceeded when 2m exceeds limits().sieve_cap.
PrimeGapRecord prime_count_gap_check(std::uint64_t m);
PrimeGapRecord prime_count_gap_check(std::uint64_t m, const PrimeSieve &sieve);

} // namespace permsolv

#endif
