#include "permsolv/witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "permsolv/atlas.hpp"
#include "permsolv/classes.hpp"
#include "permsolv/numth.hpp"

namespace permsolv {

std::string_view to_string(PairResult result) {
  return result == PairResult::all_nonsolvable ? "all-nonsolvable"
                                               : "counterexample";
}

namespace {

void require_prime_divisors(const GroupHandle &group, std::uint64_t a,
                            std::uint64_t b, const char *operation) {
  const std::string op(operation);
  if (a == b)
    throw std::invalid_argument(op + ": primes must be distinct");
  for (auto r : {a, b}) {
    if (!is_prime(r))
      throw std::invalid_argument(op + ": " + std::to_string(r) +
                                  " is not prime");
    if (group.order() % r != 0)
      throw std::invalid_argument(op + ": " + std::to_string(r) +
                                  " does not divide |G| = " +
                                  std::to_string(group.order()));
  }
}

std::vector<Permutation> first_operands(const GroupHandle &group,
                                        std::uint64_t a, bool reduce) {
  if (!reduce)
    return elements_of_order(group, a);
  std::vector<Permutation> reps;
  for (const auto &c : conjugacy_classes(group))
    if (c.order == a)
      reps.push_back(c.representative);
  return reps;
}

// Size of the single orbit of <x, y> with more than one point, or 0 when
// there are several such orbits (or none).
std::uint64_t single_orbit_length(const Permutation &x, const Permutation &y) {
  const std::size_t n = x.degree();
  std::vector<char> seen(n, 0);
  std::uint64_t length = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start] || (x[start] == start && y[start] == start))
      continue;
    if (length != 0)
      return 0;
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const auto k = stack.back();
      stack.pop_back();
      ++length;
      for (std::size_t image : {std::size_t(x[k]), std::size_t(y[k])})
        if (!seen[image]) {
          seen[image] = 1;
          stack.push_back(image);
        }
    }
  }
  return length;
}

std::uint64_t half_factorial(std::uint64_t d) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 3; i <= d; ++i)
    f *= i;
  return f;
}

bool exponent_pq_shape(std::uint64_t order, std::uint64_t p, std::uint64_t q) {
  unsigned a = 0, b = 0;
  while (order % p == 0) {
    order /= p;
    ++a;
  }
  while (order % q == 0) {
    order /= q;
    ++b;
  }
  return order == 1 && a >= 1 && b >= 1 && (a == 1 || b == 1);
}

} // namespace

PrimePairVerdict verify_prime_pair(const GroupHandle &group, std::uint64_t a,
                                   std::uint64_t b,
                                   const WitnessOptions &options) {
  require_prime_divisors(group, a, b, "verify_prime_pair");
  require_enumerable(group, "verify_prime_pair");
  const auto xs = first_operands(group, a, options.reduce);
  const auto ys = elements_of_order(group, b);
  const std::size_t items = xs.size() * ys.size();

  PrimePairVerdict verdict;
  verdict.a = a;
  verdict.b = b;
  const auto found = find_first(
      items,
      [&](std::size_t i) {
        return generates_solvable(xs[i / ys.size()], ys[i % ys.size()]);
      },
      options.exec);
  if (!found) {
    verdict.pairs_checked = items;
    return verdict;
  }
  verdict.result = PairResult::counterexample;
  verdict.x = xs[*found / ys.size()];
  verdict.y = ys[*found % ys.size()];
  generates_solvable(*verdict.x, *verdict.y, &verdict.subgroup_order);
  verdict.pairs_checked = *found + 1;
  return verdict;
}

WitnessSearch find_witness_pair(const GroupHandle &group,
                                const WitnessOptions &options) {
  require_enumerable(group, "find_witness_pair");
  WitnessSearch search;
  // Every subgroup of a solvable group is solvable, so no pair can qualify.
  if (is_solvable(group).solvable)
    return search;
  const auto primes = factorize(group.order()).primes();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      pairs.emplace_back(primes[i], primes[j]);
  std::sort(pairs.begin(), pairs.end(), [](const auto &l, const auto &r) {
    const auto lp = l.first * l.second, rp = r.first * r.second;
    return lp != rp ? lp > rp : l < r;
  });
  for (const auto &[a, b] : pairs) {
    auto verdict = verify_prime_pair(group, a, b, options);
    search.tried.push_back(verdict);
    if (verdict.all_nonsolvable()) {
      search.pair = {a, b};
      search.verdict = std::move(verdict);
      break;
    }
  }
  return search;
}

Lemma32Report lemma32_hypotheses(const GroupHandle &group, std::uint64_t p,
                                 std::uint64_t q,
                                 const WitnessOptions &options) {
  require_prime_divisors(group, p, q, "lemma32_hypotheses");
  const OrderCensus census = order_census(group);
  Lemma32Report r;
  r.p = p;
  r.q = q;
  for (auto n = group.order(); n % p == 0; n /= p)
    ++r.s;
  r.sylow_q_cyclic = sylow_is_cyclic(group, q, census);
  r.p_not_dividing_q_minus_1 = (q - 1) % p != 0;
  r.q_not_dividing_p_powers_minus_1 = true;
  for (unsigned m = 1; m <= r.s; ++m)
    if (pow_mod(p, m, q) == 1)
      r.q_not_dividing_p_powers_minus_1 = false;
  r.no_element_of_order_pq = census.count(p * q) == 0;
  r.hypotheses_hold = r.sylow_q_cyclic && r.p_not_dividing_q_minus_1 &&
                      r.q_not_dividing_p_powers_minus_1 &&
                      r.no_element_of_order_pq;

  // Solvability is conjugation invariant, so x only needs to range over
  // class representatives.
  std::vector<Permutation> xs;
  const auto classes = conjugacy_classes(group);
  for (const auto &c : classes_of_prime(classes, p))
    xs.push_back(c.representative);
  const auto ys = p_elements(group, q);
  const std::size_t items = xs.size() * ys.size();
  const auto found = find_first(
      items,
      [&](std::size_t i) {
        return generates_solvable(xs[i / ys.size()], ys[i % ys.size()]);
      },
      options.exec);
  r.oracle_no_solvable_pair = !found;
  r.oracle_pairs_checked = found ? *found + 1 : items;
  if (found)
    r.oracle_counterexample.emplace(xs[*found / ys.size()],
                                    ys[*found % ys.size()]);
  r.implication_holds = !r.hypotheses_hold || r.oracle_no_solvable_pair;
  return r;
}

std::optional<Lemma31Witness> lemma31_witness(const GroupHandle &group,
                                              std::uint64_t p,
                                              std::uint64_t q) {
  require_prime_divisors(group, p, q, "lemma31_witness");
  require_enumerable(group, "lemma31_witness");
  if (!is_solvable(group).solvable)
    throw std::invalid_argument("lemma31_witness: " + group.name() +
                                " is not solvable");
  std::vector<Permutation> candidates;
  for (const auto &g : group.elements()) {
    const auto o = element_order(g);
    if (o == p || o == q)
      candidates.push_back(g);
  }
  // Keep the first witness of least order; pq is the least possible.
  std::optional<Lemma31Witness> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const Permutation gens[] = {candidates[i], candidates[j]};
      const auto order = subgroup_order(gens);
      if (!exponent_pq_shape(order, p, q) || (best && order >= best->order))
        continue;
      const auto sub = build_group("H", group.degree(), {gens[0], gens[1]});
      const auto census = order_census(sub);
      bool exponent_pq = census.count(p) > 0 && census.count(q) > 0;
      for (const auto &[o, n] : census.counts)
        exponent_pq = exponent_pq && (o == 1 || o == p || o == q || o == p * q);
      if (!exponent_pq)
        continue;
      best = Lemma31Witness{gens[0], gens[1], order, census};
      if (order == p * q)
        return best;
    }
  }
  return best;
}

std::span<const SporadicTableEntry> sporadic_entries() {
  static const std::vector<SporadicTableEntry> table = {
      {"M11", 3, 9, 11, 11, {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
      {"M12", 3, 27, 11, 11, {{2, 6}, {3, 3}, {5, 1}, {11, 1}}},
      {"M22", 7, 7, 23, 23, {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
      {"M23", 7, 7, 23, 23, {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {"M24", 7, 7, 23, 23,
       {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {"J1", 11, 11, 19, 19, {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}},
      {"J2", 3, 27, 7, 7, {{2, 7}, {3, 3}, {5, 2}, {7, 1}}},
      {"J3", 17, 17, 19, 19, {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}},
      {"J4", 37, 37, 43, 43,
       {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1},
        {37, 1}, {43, 1}}},
      {"HS", 7, 7, 11, 11, {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}},
      {"He", 3, 27, 17, 17, {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}},
      {"McL", 7, 7, 11, 11, {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}},
      {"Suz", 11, 11, 13, 13,
       {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {"Ly", 37, 37, 67, 67,
       {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}},
      {"Ru", 13, 13, 29, 29,
       {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}},
      {"O'N", 19, 19, 31, 31,
       {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}},
      {"Co1", 13, 13, 23, 23,
       {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}},
      {"Co2", 7, 7, 23, 23,
       {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {"Co3", 7, 7, 23, 23,
       {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {"Fi22", 11, 11, 13, 13,
       {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {"Fi23", 17, 17, 23, 23,
       {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}},
      {"Fi24'", 23, 23, 29, 29,
       {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1},
        {29, 1}}},
      {"HN", 11, 11, 19, 19, {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}},
      {"Th", 19, 19, 31, 31,
       {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}},
      {"B", 31, 31, 47, 47,
       {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1},
        {23, 1}, {31, 1}, {47, 1}}},
      {"M", 59, 59, 71, 71,
       {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1},
        {23, 1}, {29, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}}},
      {"2F4(2)'", 5, 25, 13, 13, {{2, 11}, {3, 3}, {5, 2}, {13, 1}}},
  };
  return table;
}

const SporadicTableEntry &sporadic_table(std::string_view name) {
  for (const auto &e : sporadic_entries())
    if (e.name == name)
      return e;
  throw std::invalid_argument("unknown sporadic group '" + std::string(name) +
                              "'");
}

SporadicArithmetic sporadic_arithmetic(const SporadicTableEntry &entry) {
  auto part = [&](std::uint64_t r) -> std::pair<std::uint64_t, unsigned> {
    for (const auto &[prime, exp] : entry.order_factors)
      if (prime == r)
        return {checked_pow(r, exp), exp};
    return {1, 0};
  };
  const auto [p_part, s] = part(entry.p);
  const auto q_part = part(entry.q).first;
  SporadicArithmetic a;
  a.sylow_orders_match =
      p_part == entry.p_sylow_order && q_part == entry.q_sylow_order;
  a.p_not_dividing_q_minus_1 = (entry.q - 1) % entry.p != 0;
  // The listed Sylow order fixes s when it disagrees with the group order.
  unsigned listed_s = 0;
  for (auto n = entry.p_sylow_order; n % entry.p == 0; n /= entry.p)
    ++listed_s;
  a.q_not_dividing_p_powers_minus_1 = true;
  for (unsigned m = 1; m <= std::max(s, listed_s); ++m)
    if (pow_mod(entry.p, m, entry.q) == 1)
      a.q_not_dividing_p_powers_minus_1 = false;
  a.q_sylow_cyclic_by_order = entry.q_sylow_order == entry.q;
  return a;
}

AlternatingReport verify_alternating(std::uint64_t n,
                                     const WitnessOptions &options) {
  if (n < 5)
    throw std::invalid_argument("verify_alternating needs n >= 5, got " +
                                std::to_string(n));
  std::uint64_t order = 1;
  for (std::uint64_t i = 3; i <= n; ++i)
    if (__builtin_mul_overflow(order, i, &order) || order > limits().enum_cap)
      throw CapExceeded("verify_alternating: A" + std::to_string(n) +
                        " exceeds the enumeration cap " +
                        std::to_string(limits().enum_cap));
  const GroupHandle group = catalog_lookup("A" + std::to_string(n));

  AlternatingReport report;
  report.n = n;
  std::tie(report.p, report.q) = alt_prime_selection(n);
  const auto xs = first_operands(group, report.p, options.reduce);
  const auto ys = elements_of_order(group, report.q);
  const std::size_t items = xs.size() * ys.size();

  struct Item {
    bool solvable = false;
    std::uint64_t order = 0;
    std::uint64_t orbit = 0;
  };
  std::vector<Item> results(items);
  for_each_index(
      items,
      [&](std::size_t i) {
        const auto &x = xs[i / ys.size()];
        const auto &y = ys[i % ys.size()];
        auto &r = results[i];
        r.solvable = generates_solvable(x, y, &r.order);
        r.orbit = single_orbit_length(x, y);
      },
      options.exec);

  auto &v = report.verdict;
  v.a = report.p;
  v.b = report.q;
  v.pairs_checked = items;
  for (std::size_t i = 0; i < items; ++i) {
    const auto &r = results[i];
    if (r.solvable && v.all_nonsolvable()) {
      v.result = PairResult::counterexample;
      v.x = xs[i / ys.size()];
      v.y = ys[i % ys.size()];
      v.subgroup_order = r.order;
    }
    const bool shape =
        r.orbit != 0 && (r.order == half_factorial(r.orbit) ||
                         (n == 6 && r.orbit == 6 && r.order == 60));
    if (!shape)
      ++report.dichotomy_violations;
    ++report.shapes[{r.orbit, r.order}];
  }
  report.dichotomy_holds = report.dichotomy_violations == 0;
  return report;
}

} // namespace permsolv
