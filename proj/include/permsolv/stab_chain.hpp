#ifndef PERMSOLV_STAB_CHAIN_HPP
#define PERMSOLV_STAB_CHAIN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permsolv/permutation.hpp"

namespace permsolv {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i stabilizes the base points b_0..b_{i-1}; its orbit of b_i carries
/// an explicit transversal. New base points are taken greedily as the first
/// point moved by a sifting residue, so identical generator sequences always
/// produce identical chains.
///
/// Elements are addressed by rank: the orbit positions (c_0, ..., c_{k-1})
/// read as a mixed-radix number with level 0 most significant. Rank 0 is the
/// identity, and a contiguous rank range is a union of transversal-prefix
/// blocks.
class StabChain {
public:
  explicit StabChain(std::size_t degree);
  StabChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const { return degree_; }

  /// Adds g to the group. Returns false if g was already a member.
  bool insert(const Permutation &g);

  bool contains(const Permutation &g) const;

  /// Throws std::overflow_error if the order does not fit in 64 bits.
  std::uint64_t order() const;

  std::size_t base_length() const { return levels_.size(); }
  std::vector<std::size_t> base() const;
  std::size_t orbit_size(std::size_t level) const {
    return levels_[level].orbit.size();
  }
  std::span<const Permutation::point_type> orbit(std::size_t level) const {
    return levels_[level].orbit;
  }
  std::span<const Permutation> level_generators(std::size_t level) const {
    return levels_[level].gens;
  }

  /// Rank of g, or nullopt if g is not a member.
  std::optional<std::uint64_t> rank(const Permutation &g) const;

  /// Inverse of rank(); rank must be below order().
  Permutation element(std::uint64_t rank) const;

private:
  struct Level {
    std::size_t base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Permutation::point_type> orbit;
    std::vector<std::int32_t> position; // point -> index into orbit, or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
    std::vector<std::uint32_t> tested; // gens already paired with orbit[i]
  };

  /// Sifts h in place from level `from`; returns the level where it dropped
  /// out, or levels_.size() when it passed every level.
  std::size_t sift(Permutation &h, std::size_t from, Permutation &scratch) const;

  void add_generator(std::size_t level, const Permutation &g);
  void push_level(std::size_t base_point);
  void close(std::size_t from_level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

} // namespace permsolv

#endif
