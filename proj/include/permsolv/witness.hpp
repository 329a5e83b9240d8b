#ifndef PERMSOLV_WITNESS_HPP
#define PERMSOLV_WITNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permsolv/criteria.hpp"
#include "permsolv/group.hpp"
#include "permsolv/permutation.hpp"
#include "permsolv/structure.hpp"

namespace permsolv {

struct WitnessOptions {
  Exec exec = default_exec();
  /// x ranges over class representatives of order a; false takes every
  /// element of order a.
  bool reduce = true;
};

enum class PairResult { all_nonsolvable, counterexample };

std::string_view to_string(PairResult result);

struct PrimePairVerdict {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  PairResult result = PairResult::all_nonsolvable;
  std::optional<Permutation> x; ///< |x| = a, set on counterexample
  std::optional<Permutation> y; ///< |y| = b
  std::uint64_t subgroup_order = 0;
  std::uint64_t pairs_checked = 0;

  bool all_nonsolvable() const {
    return result == PairResult::all_nonsolvable;
  }
};

/// Checks that <x, y> is nonsolvable for all x, y with |x| = a, |y| = b.
/// Throws std::invalid_argument unless a, b are distinct primes dividing |G|,
/// and CapExceeded above the enumeration cap.
PrimePairVerdict verify_prime_pair(const GroupHandle &group, std::uint64_t a,
                                   std::uint64_t b,
                                   const WitnessOptions &options = {});

struct WitnessSearch {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> pair; ///< a < b
  std::optional<PrimePairVerdict> verdict; ///< verdict for `pair`
  std::vector<PrimePairVerdict> tried;     ///< in scan order
};

/// First prime pair, by decreasing product then lexicographically, whose
/// verdict is all-nonsolvable.
WitnessSearch find_witness_pair(const GroupHandle &group,
                                const WitnessOptions &options = {});

struct Lemma32Report {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned s = 0; ///< |G|_p = p^s
  bool sylow_q_cyclic = false;
  bool p_not_dividing_q_minus_1 = false;
  bool q_not_dividing_p_powers_minus_1 = false; ///< q does not divide p^m - 1, m <= s
  bool no_element_of_order_pq = false;
  bool hypotheses_hold = false;
  /// Exhaustive oracle: no p-element x and q-element y generate a solvable
  /// group.
  bool oracle_no_solvable_pair = false;
  std::optional<std::pair<Permutation, Permutation>> oracle_counterexample;
  std::uint64_t oracle_pairs_checked = 0;
  /// hypotheses_hold implies oracle_no_solvable_pair.
  bool implication_holds = false;
};

Lemma32Report lemma32_hypotheses(const GroupHandle &group, std::uint64_t p,
                                 std::uint64_t q,
                                 const WitnessOptions &options = {});

struct Lemma31Witness {
  Permutation x;
  Permutation y;
  std::uint64_t order = 0;
  OrderCensus census; ///< census of <x, y>
};

/// Searches pairs of elements of order p or q for a subgroup of order p^a q
/// or p q^a and exponent pq. Throws std::invalid_argument when G is not
/// solvable or p, q are not distinct prime divisors of |G|.
std::optional<Lemma31Witness> lemma31_witness(const GroupHandle &group,
                                              std::uint64_t p,
                                              std::uint64_t q);

struct SporadicTableEntry {
  std::string_view name;
  std::uint64_t p;
  std::uint64_t p_sylow_order;
  std::uint64_t q;
  std::uint64_t q_sylow_order;
  /// Group order as prime -> exponent (the orders of the larger groups do not
  /// fit in 64 bits).
  std::vector<std::pair<std::uint64_t, unsigned>> order_factors;
};

std::span<const SporadicTableEntry> sporadic_entries();

/// Throws std::invalid_argument for a name outside the table.
const SporadicTableEntry &sporadic_table(std::string_view name);

struct SporadicArithmetic {
  bool sylow_orders_match = false; ///< p^a, q^b are the full p-, q-parts
  bool p_not_dividing_q_minus_1 = false;
  bool q_not_dividing_p_powers_minus_1 = false;
  bool q_sylow_cyclic_by_order = false; ///< q^b = q
};

/// The pair-selection conditions that can be decided from the group order
/// alone; the Sylow-cyclicity of q-parts above q and the absence of elements
/// of order pq need the group itself.
SporadicArithmetic sporadic_arithmetic(const SporadicTableEntry &entry);

struct AlternatingReport {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  PrimePairVerdict verdict;
  bool dichotomy_holds = false;
  std::uint64_t dichotomy_violations = 0;
  /// (orbit length d, subgroup order) -> number of checked pairs.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> shapes;
  bool passed() const {
    return verdict.all_nonsolvable() && dichotomy_holds;
  }
};

/// Runs the pair check on A_n with the selected primes and, per pair, checks
/// that <x, y> has one nontrivial orbit of length d and order d!/2, or order
/// 60 with n = d = 6. Throws std::invalid_argument for n < 5 and CapExceeded
/// when A_n exceeds the enumeration cap.
AlternatingReport verify_alternating(std::uint64_t n,
                                     const WitnessOptions &options = {});

} // namespace permsolv

#endif
