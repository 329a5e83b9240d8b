#include "permsolv/structure.hpp"

#include <algorithm>

#include "permsolv/numth.hpp"

namespace permsolv {

StabChain normal_closure(std::size_t degree, std::span<const Permutation> seeds,
                         std::span<const Permutation> gens,
                         std::vector<Permutation> &out) {
  StabChain chain(degree);
  const std::size_t first = out.size();
  for (const auto &s : seeds)
    if (chain.insert(s))
      out.push_back(s);
  for (std::size_t k = first; k < out.size(); ++k) {
    for (const auto &g : gens) {
      Permutation c = conjugate(out[k], g);
      if (chain.insert(c))
        out.push_back(std::move(c));
    }
  }
  return chain;
}

namespace {

std::vector<Permutation> generator_commutators(
    std::span<const Permutation> gens) {
  std::vector<Permutation> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        seeds.push_back(std::move(c));
    }
  return seeds;
}

std::vector<Permutation> nontrivial(std::span<const Permutation> gens) {
  std::vector<Permutation> out;
  for (const auto &g : gens)
    if (!g.is_identity() &&
        std::find(out.begin(), out.end(), g) == out.end())
      out.push_back(g);
  return out;
}

} // namespace

std::vector<Permutation> derived_subgroup(std::span<const Permutation> gens) {
  std::vector<Permutation> out;
  if (gens.empty())
    return out;
  const auto seeds = generator_commutators(gens);
  normal_closure(gens.front().degree(), seeds, gens, out);
  return out;
}

DerivedSeriesReport is_solvable(std::span<const Permutation> gens) {
  DerivedSeriesReport report;
  std::vector<Permutation> current = nontrivial(gens);
  if (current.empty()) {
    report.lengths = {1};
    report.solvable = true;
    report.derived_length = 0;
    return report;
  }
  const std::size_t degree = current.front().degree();
  std::uint64_t order = StabChain(degree, current).order();
  report.lengths.push_back(order);
  while (order > 1) {
    std::vector<Permutation> next;
    const auto seeds = generator_commutators(current);
    const StabChain chain = normal_closure(degree, seeds, current, next);
    const std::uint64_t next_order = chain.order();
    if (next_order == order)
      break;
    report.lengths.push_back(next_order);
    order = next_order;
    current = std::move(next);
  }
  report.solvable = report.lengths.back() == 1;
  if (report.solvable)
    report.derived_length = report.lengths.size() - 1;
  return report;
}

DerivedSeriesReport is_solvable(const GroupHandle &group) {
  return is_solvable(group.generators());
}

bool generates_solvable(const Permutation &x, const Permutation &y,
                        std::uint64_t *order) {
  const Permutation gens[] = {x, y};
  const auto report = is_solvable(gens);
  if (order)
    *order = report.lengths.front();
  return report.solvable;
}

std::uint64_t OrderCensus::total() const {
  std::uint64_t sum = 0;
  for (const auto &[order, count] : counts)
    sum += count;
  return sum;
}

std::uint64_t OrderCensus::count(std::uint64_t order) const {
  auto it = counts.find(order);
  return it == counts.end() ? 0 : it->second;
}

OrderCensus order_census(const GroupHandle &group) {
  OrderCensus census;
  for (const auto &g : group.elements())
    ++census.counts[element_order(g)];
  return census;
}

bool is_nilpotent(const GroupHandle &group, const OrderCensus &census) {
  const auto f = factorize(group.order());
  for (const auto &[p, e] : f.factors) {
    std::uint64_t p_elements = 0;
    for (const auto &[order, count] : census.counts)
      if (is_power_of(order, p))
        p_elements += count;
    if (p_elements != f.part(p))
      return false;
  }
  return true;
}

bool is_nilpotent(const GroupHandle &group) {
  return is_nilpotent(group, order_census(group));
}

bool sylow_is_cyclic(const GroupHandle &group, std::uint64_t q,
                     const OrderCensus &census) {
  if (!is_prime(q) || group.order() % q != 0)
    throw std::invalid_argument("sylow_is_cyclic: " + std::to_string(q) +
                                " is not a prime divisor of |" + group.name() +
                                "|");
  return census.count(factorize(group.order()).part(q)) > 0;
}

bool sylow_is_cyclic(const GroupHandle &group, std::uint64_t q) {
  return sylow_is_cyclic(group, q, order_census(group));
}

bool is_pi_group(std::uint64_t n, const std::set<std::uint64_t> &primes) {
  if (n == 0)
    return false;
  for (auto p : primes) {
    if (p < 2)
      continue;
    while (n % p == 0)
      n /= p;
  }
  return n == 1;
}

bool SolvableRadical::contains_rank(std::uint64_t rank) const {
  return std::binary_search(ranks.begin(), ranks.end(), rank);
}

SolvableRadical solvable_radical(const GroupHandle &group, Exec exec) {
  const auto &elements = group.elements();
  std::vector<std::uint8_t> member(elements.size(), 0);
  for_each_index(
      elements.size(),
      [&](std::size_t i) {
        for (const auto &y : elements)
          if (!generates_solvable(elements[i], y))
            return;
        member[i] = 1;
      },
      exec);

  SolvableRadical radical;
  StabChain chain(group.degree());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!member[i])
      continue;
    radical.ranks.push_back(i);
    radical.elements.push_back(elements[i]);
    if (chain.insert(elements[i]))
      radical.generators.push_back(elements[i]);
  }

  // <S> = S exactly when the generated order matches the set size.
  if (chain.order() != radical.elements.size())
    throw EngineError("solvable radical of " + group.name() +
                      " is not closed under multiplication");
  for (const auto &x : radical.generators)
    for (const auto &g : group.generators())
      if (!member[group.index_of(conjugate(x, g))])
        throw EngineError("solvable radical of " + group.name() +
                          " is not normal");
  if (!is_solvable(radical.generators).solvable)
    throw EngineError("solvable radical of " + group.name() +
                      " is not solvable");
  if (radical.generators.empty())
    radical.generators.push_back(group.identity());
  return radical;
}

} // namespace permsolv
