#ifndef PERMSOLV_STRUCTURE_HPP
#define PERMSOLV_STRUCTURE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "permsolv/group.hpp"
#include "permsolv/parallel.hpp"
#include "permsolv/permutation.hpp"

namespace permsolv {

/// An internal consistency check failed; indicates a bug, not bad input.
class EngineError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct DerivedSeriesReport {
  /// |G|, |G'|, |G''|, ... up to the trivial group or the first repeat.
  std::vector<std::uint64_t> lengths;
  bool solvable = false;
  /// Number of steps to reach 1; empty when the series stabilized above 1.
  std::optional<std::size_t> derived_length;
};

/// Elements g^-1 n g for n in seeds, g in gens, closed under the same
/// operation. Appends the inserted generators to `out` and returns the chain.
StabChain normal_closure(std::size_t degree, std::span<const Permutation> seeds,
                         std::span<const Permutation> gens,
                         std::vector<Permutation> &out);

/// Generators of [G, G] for G = <gens>: the normal closure of the
/// commutators of generator pairs.
std::vector<Permutation> derived_subgroup(std::span<const Permutation> gens);

DerivedSeriesReport is_solvable(std::span<const Permutation> gens);
DerivedSeriesReport is_solvable(const GroupHandle &group);

/// Solvability of <x, y>; when order is given it receives |<x, y>|.
bool generates_solvable(const Permutation &x, const Permutation &y,
                        std::uint64_t *order = nullptr);

struct OrderCensus {
  std::map<std::uint64_t, std::uint64_t> counts; ///< element order -> count
  std::uint64_t total() const;
  std::uint64_t count(std::uint64_t order) const;
};

OrderCensus order_census(const GroupHandle &group);

/// For every prime p | |G|, the p-power-order elements number exactly |G|_p.
bool is_nilpotent(const GroupHandle &group);
bool is_nilpotent(const GroupHandle &group, const OrderCensus &census);

/// Some element has order |G|_q. Throws std::invalid_argument if q is not a
/// prime divisor of |G|.
bool sylow_is_cyclic(const GroupHandle &group, std::uint64_t q);
bool sylow_is_cyclic(const GroupHandle &group, std::uint64_t q,
                     const OrderCensus &census);

/// Every prime factor of n lies in primes.
bool is_pi_group(std::uint64_t n, const std::set<std::uint64_t> &primes);

struct SolvableRadical {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements; ///< in rank order
  std::vector<std::uint64_t> ranks;  ///< ascending
  bool contains_rank(std::uint64_t rank) const;
};

/// The elements x with <x, y> solvable for every y in G, found exhaustively.
/// The result is checked to be a solvable normal subgroup before it is
/// returned; a failed check throws EngineError.
SolvableRadical solvable_radical(const GroupHandle &group,
                                 Exec exec = default_exec());

} // namespace permsolv

#endif
