#ifndef PERMSOLV_GROUP_HPP
#define PERMSOLV_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "permsolv/permutation.hpp"
#include "permsolv/stab_chain.hpp"

namespace permsolv {

/// Process-wide size limits. Defaults can be overridden from the environment
/// variables ENUM_CAP, PAIR_CAP and SIEVE_CAP (see load_limits_from_env).
struct Limits {
  std::uint64_t enum_cap = 200000;
  std::uint64_t pair_cap = 100000000;
  std::uint64_t sieve_cap = 10000000;
};

Limits &limits();

/// Reads ENUM_CAP / PAIR_CAP / SIEVE_CAP. Throws std::invalid_argument on a
/// value that is not a positive integer.
void load_limits_from_env();

/// An operation needed more elements, pairs or sieve range than allowed.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A permutation group given by generators, with its stabilizer chain.
/// Immutable once built; copies share the chain and the element cache.
class GroupHandle {
public:
  const std::string &name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::span<const Permutation> generators() const { return generators_; }
  const StabChain &chain() const { return *chain_; }
  std::uint64_t order() const { return order_; }

  bool contains(const Permutation &p) const { return chain_->contains(p); }
  std::optional<std::uint64_t> rank(const Permutation &p) const {
    return chain_->rank(p);
  }
  Permutation element(std::uint64_t rank) const {
    return chain_->element(rank);
  }
  Permutation identity() const { return Permutation(degree_); }

  /// All elements in rank order. Computed once and shared between copies;
  /// throws CapExceeded above limits().enum_cap.
  const std::vector<Permutation> &elements() const;

  /// Index of p in elements(); p must be a member.
  std::uint64_t index_of(const Permutation &p) const;

private:
  friend GroupHandle build_group(std::string name, std::size_t degree,
                                 std::vector<Permutation> generators);

  struct Cache;

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabChain> chain_;
  std::uint64_t order_ = 1;
  std::shared_ptr<Cache> cache_;
};

/// Builds the chain for <generators>. Throws std::invalid_argument when the
/// generator list is empty or a degree differs from `degree`.
GroupHandle build_group(std::string name, std::size_t degree,
                        std::vector<Permutation> generators);

/// Convenience overload taking 1-based cycle strings.
GroupHandle build_group_from_cycles(std::string name, std::size_t degree,
                                    const std::vector<std::string> &cycles);

/// Elements of G in rank order (a fresh copy). Throws CapExceeded.
std::vector<Permutation> enumerate_elements(const GroupHandle &group);

/// Visits elements with rank in [first, last) without materializing the whole
/// group; suitable for partitioning across workers by rank range.
template <class Visitor>
void for_each_element(const GroupHandle &group, std::uint64_t first,
                      std::uint64_t last, Visitor &&visit) {
  for (std::uint64_t r = first; r < last; ++r)
    visit(r, group.element(r));
}

/// |<gens>|; 1 for an empty list. Throws std::invalid_argument on mixed
/// degrees.
std::uint64_t subgroup_order(std::span<const Permutation> gens);

/// Throws CapExceeded when order exceeds limits().enum_cap.
void require_enumerable(const GroupHandle &group, const char *operation);

} // namespace permsolv

#endif
