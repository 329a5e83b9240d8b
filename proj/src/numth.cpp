#include "permsolv/numth.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "permsolv/group.hpp"

namespace permsolv {

namespace {

constexpr std::uint64_t kInt64Max =
    static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d,
                          unsigned s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1)
    return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1)
      return false;
  }
  return true;
}

} // namespace

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto &[p, e] : factors)
    out.push_back(p);
  return out;
}

std::uint64_t Factorization::part(std::uint64_t p) const {
  auto it = factors.find(p);
  if (it == factors.end())
    return 1;
  return checked_pow(p, it->second);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 1)
    return 0;
  std::uint64_t result = 1;
  a %= m;
  while (e > 0) {
    if (e & 1)
      result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull})
    if (miller_rabin_witness(n, a, d, s))
      return false;
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0 || n > kInt64Max)
    throw std::invalid_argument("factorize: n must lie in 1..2^63-1");
  Factorization f;
  f.n = n;
  std::uint64_t rest = n;
  while (rest % 2 == 0) {
    ++f.factors[2];
    rest /= 2;
  }
  bool rest_is_prime = rest > 1 && is_prime(rest);
  for (std::uint64_t d = 3; !rest_is_prime && rest > 1 && d <= rest / d;
       d += 2) {
    if (rest % d != 0)
      continue;
    while (rest % d == 0) {
      ++f.factors[d];
      rest /= d;
    }
    rest_is_prime = rest > 1 && is_prime(rest);
  }
  if (rest > 1)
    ++f.factors[rest];
  return f;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2)
    return std::nullopt;
  auto f = factorize(n);
  if (f.factors.size() != 1)
    return std::nullopt;
  return f.factors.begin()->first;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2 || std::gcd(a, m) != 1)
    throw std::invalid_argument("multiplicative_order: need gcd(a, m) = 1");
  std::uint64_t x = a % m;
  std::uint64_t k = 1;
  while (x != 1) {
    x = mul_mod(x, a, m);
    ++k;
  }
  return k;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result) || result > kInt64Max)
      throw std::overflow_error(std::to_string(base) + "^" +
                                std::to_string(exp) +
                                " exceeds the signed 64-bit range");
  }
  return result;
}

std::vector<std::uint64_t> primitive_prime_divisors(std::uint64_t q,
                                                    unsigned e) {
  if (q < 2 || e < 1)
    throw std::invalid_argument("primitive_prime_divisors: need q >= 2, e >= 1");
  const std::uint64_t value = checked_pow(q, e) - 1;
  std::vector<std::uint64_t> out;
  for (auto r : factorize(value).primes()) {
    bool primitive = true;
    for (unsigned i = 1; i < e && primitive; ++i)
      primitive = pow_mod(q, i, r) != 1;
    if (primitive)
      out.push_back(r);
  }
  return out;
}

bool is_mersenne_prime(std::uint64_t q) {
  if (q == std::numeric_limits<std::uint64_t>::max())
    return false;
  const std::uint64_t next = q + 1;
  return (next & (next - 1)) == 0 && is_prime(q);
}

bool zsigmondy_exception(std::uint64_t q, unsigned e) {
  if (q < 2 || e < 2)
    throw std::invalid_argument("zsigmondy_exception: need q >= 2, e >= 2");
  return (is_mersenne_prime(q) && e == 2) || (q == 2 && e == 6);
}

std::pair<std::uint64_t, std::uint64_t> alt_prime_selection(std::uint64_t n) {
  if (n < 5)
    throw std::invalid_argument("alt_prime_selection: n must be at least 5");
  std::uint64_t q = n;
  while (!is_prime(q))
    --q;
  std::uint64_t p;
  if (n == 6) {
    p = 3;
  } else if (n == 10) {
    p = 5;
  } else {
    p = n / 2 + 1;
    while (!is_prime(p))
      ++p;
  }
  if (2 * p < n || p >= q)
    throw std::logic_error("alt_prime_selection: no valid prime pair for n = " +
                           std::to_string(n));
  return {p, q};
}

PrimeSieve::PrimeSieve(std::uint64_t limit)
    : limit_(limit), composite_(limit + 1, 0), prefix_(limit + 1, 0) {
  composite_[0] = 1;
  if (limit >= 1)
    composite_[1] = 1;
  for (std::uint64_t i = 2; i <= limit / i; ++i)
    if (!composite_[i])
      for (std::uint64_t j = i * i; j <= limit; j += i)
        composite_[j] = 1;
  std::uint32_t count = 0;
  for (std::uint64_t i = 0; i <= limit; ++i) {
    if (!composite_[i])
      ++count;
    prefix_[i] = count;
  }
}

PrimeGapRecord prime_count_gap_check(std::uint64_t m, const PrimeSieve &sieve) {
  if (m < 2)
    throw std::invalid_argument("prime_count_gap_check: m must be at least 2");
  if (2 * m > sieve.limit())
    throw std::invalid_argument("prime_count_gap_check: sieve too small");
  PrimeGapRecord record;
  record.m = m;
  record.pi_2m = sieve.pi(2 * m);
  record.pi_m = sieve.pi(m);
  record.bound =
      static_cast<double>(m) / (3.0 * std::log(2.0 * static_cast<double>(m)));
  record.satisfied =
      static_cast<double>(record.pi_2m - record.pi_m) > record.bound;
  return record;
}

PrimeGapRecord prime_count_gap_check(std::uint64_t m) {
  if (m < 2)
    throw std::invalid_argument("prime_count_gap_check: m must be at least 2");
  if (m > limits().sieve_cap / 2)
    throw CapExceeded("prime_count_gap_check: 2m = " + std::to_string(2 * m) +
                      " exceeds the sieve cap " +
                      std::to_string(limits().sieve_cap));
  return prime_count_gap_check(m, PrimeSieve(2 * m));
}

} // namespace permsolv
