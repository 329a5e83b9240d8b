#ifndef PERMSOLV_CRITERIA_HPP
#define PERMSOLV_CRITERIA_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permsolv/group.hpp"
#include "permsolv/parallel.hpp"
#include "permsolv/permutation.hpp"
#include "permsolv/structure.hpp"

namespace permsolv {

enum class Verdict { holds, fails };

std::string_view to_string(Verdict verdict);

struct NamedElement {
  std::string role;
  Permutation element;
};

struct CriterionStats {
  std::uint64_t pairs_tested = 0;
  std::uint64_t subgroups_generated = 0;
  double wall_time_ms = 0;
};

/// Outcome of one criterion run. On failure, `witness` holds the elements of
/// the first failing work item in canonical order, so the same input always
/// yields the same witness regardless of thread count.
struct CriterionReport {
  std::string criterion;
  Verdict verdict = Verdict::holds;
  std::vector<NamedElement> witness;
  std::vector<std::pair<std::string, std::string>> details;
  /// Satisfying assignments, one per work item, when requested.
  std::vector<std::vector<NamedElement>> assignments;
  CriterionStats stats;

  bool holds() const { return verdict == Verdict::holds; }
  const Permutation &witness_element(std::string_view role) const;
  std::string detail(std::string_view key) const;
};

struct CheckOptions {
  Exec exec = default_exec();
  /// Quantify over class representatives where the predicate is invariant
  /// under conjugation; false runs the full loops.
  bool reduce = true;
  bool record_assignments = false;
};

/// A class of finite groups given by a membership test on subgroups.
struct FamilyPredicate {
  std::string id;
  std::function<bool(std::span<const Permutation> gens, const StabChain &chain)>
      contains;
  bool closed_under_subgroups = false;
  bool closed_under_quotients = false;
  bool closed_under_extensions = false;

  bool fully_closed() const {
    return closed_under_subgroups && closed_under_quotients &&
           closed_under_extensions;
  }
};

FamilyPredicate solvable_family();
FamilyPredicate pi_family(std::set<std::uint64_t> primes);
FamilyPredicate odd_order_family();

/// Rebuilds a built-in family from its id: "solvable", "odd", "pi:2,3".
FamilyPredicate family_from_id(std::string_view id);

/// thmC_check was handed a family without all three closure properties.
class FamilyHypothesisError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Every pair of elements generates a solvable group.
CriterionReport thompson_check(const GroupHandle &group,
                               const CheckOptions &options = {});

/// For all x, y some g gives <x, y^g> solvable.
CriterionReport thmA_condition2(const GroupHandle &group,
                                const CheckOptions &options = {});

/// As thmA_condition2, with x and y of nontrivial prime power order.
CriterionReport thmA_condition3(const GroupHandle &group,
                                const CheckOptions &options = {});

/// For distinct prime-power classes C != D, some x in C, y in D generate a
/// solvable group.
CriterionReport thmAprime_check(const GroupHandle &group,
                                const CheckOptions &options = {});

/// p-element x, q-element y (p != q): x commutes with some y^g.
CriterionReport corE_check(const GroupHandle &group,
                           const CheckOptions &options = {});

/// p-element x, q-element y (p != q): some <x, y^g> is a {p,q}-group.
CriterionReport corF_check(const GroupHandle &group,
                           const CheckOptions &options = {});

/// Every pair of classes (C, D) has x in C, y in D with <x, y> in the family.
/// Throws FamilyHypothesisError unless the family is fully closed.
CriterionReport thmC_check(const GroupHandle &group,
                           const FamilyPredicate &family,
                           const CheckOptions &options = {});

/// Any two elements of one class generate a solvable group.
CriterionReport same_class_check(const GroupHandle &group,
                                 const CheckOptions &options = {});

/// <x, x^y> solvable for every p-element x (prime p > 3) and 2-element y.
CriterionReport kaplan_levy_check(const GroupHandle &group,
                                  const CheckOptions &options = {});

struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
};

struct ProportionMode {
  bool sampled = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static ProportionMode exhaustive() { return {}; }
  static ProportionMode sample(std::uint64_t count, std::uint64_t seed) {
    return {true, count, seed};
  }
};

struct ProportionResult {
  std::uint64_t solvable_pairs = 0;
  std::uint64_t total_pairs = 0;
  Fraction fraction; ///< reduced
  bool exceeds_threshold = false; ///< fraction > 11/30
  CriterionReport report;
};

inline constexpr Fraction kSolvablePairThreshold{11, 30};

/// Fraction of ordered pairs (x, y) with <x, y> solvable. Exhaustive mode
/// throws CapExceeded when |G|^2 exceeds limits().pair_cap.
ProportionResult proportion_solvable_pairs(const GroupHandle &group,
                                           const ProportionMode &mode = {},
                                           const CheckOptions &options = {});

struct ProbeResult {
  bool satisfies_existential = false; ///< every y has some solvable <x, y^g>
  bool in_radical = false;
};

/// (true, false) is a counterexample to describing the solvable radical by
/// the existential condition.
ProbeResult radical_conjecture_probe(const GroupHandle &group,
                                     const Permutation &x,
                                     const CheckOptions &options = {});
ProbeResult radical_conjecture_probe(const GroupHandle &group,
                                     const Permutation &x,
                                     const SolvableRadical &radical,
                                     const CheckOptions &options = {});

/// Re-runs the failing predicate on a report's witness in isolation. True
/// when the failure is reproduced; false for holding reports.
bool replay_failure(const GroupHandle &group, const CriterionReport &report);

} // namespace permsolv

#endif
