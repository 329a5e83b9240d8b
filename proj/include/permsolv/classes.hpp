#ifndef PERMSOLV_CLASSES_HPP
#define PERMSOLV_CLASSES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "permsolv/group.hpp"
#include "permsolv/permutation.hpp"

namespace permsolv {

struct ClassInfo {
  Permutation representative; ///< lexicographically least member
  std::uint64_t size = 0;
  std::uint64_t order = 0; ///< element order, constant on the class
  std::vector<std::uint64_t> members; ///< element ranks, ascending
};

/// Conjugacy classes by orbit closure under conjugation by the generators,
/// sorted by (order, size, representative). Throws CapExceeded.
std::vector<ClassInfo> conjugacy_classes(const GroupHandle &group);

/// Classes whose element order is p^k with k >= 1.
std::vector<ClassInfo> prime_power_classes(std::span<const ClassInfo> classes);

/// Classes whose element order is a nontrivial power of p.
std::vector<ClassInfo> classes_of_prime(std::span<const ClassInfo> classes,
                                        std::uint64_t p);

/// Elements of exact order n, in rank order. Throws CapExceeded.
std::vector<Permutation> elements_of_order(const GroupHandle &group,
                                           std::uint64_t n);

/// Elements whose order is a power of p (identity excluded), in rank order.
std::vector<Permutation> p_elements(const GroupHandle &group, std::uint64_t p);

} // namespace permsolv

#endif
