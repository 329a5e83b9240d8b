#include "permsolv/stab_chain.hpp"

#include <stdexcept>
#include <utility>

namespace permsolv {

StabChain::StabChain(std::size_t degree) : degree_(degree) {
  if (degree == 0)
    throw std::invalid_argument("degree must be positive");
}

StabChain::StabChain(std::size_t degree,
                     std::span<const Permutation> generators)
    : StabChain(degree) {
  for (const auto &g : generators)
    insert(g);
}

std::size_t StabChain::sift(Permutation &h, std::size_t from,
                            Permutation &scratch) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level &level = levels_[i];
    const auto pos = level.position[h[level.base_point]];
    if (pos < 0)
      return i;
    Permutation::multiply_into(h, level.inverse_transversal[pos], scratch);
    std::swap(h, scratch);
  }
  return levels_.size();
}

void StabChain::push_level(std::size_t base_point) {
  Level level;
  level.base_point = base_point;
  level.orbit.push_back(static_cast<Permutation::point_type>(base_point));
  level.position.assign(degree_, -1);
  level.position[base_point] = 0;
  level.transversal.emplace_back(degree_);
  level.inverse_transversal.emplace_back(degree_);
  level.tested.push_back(0);
  levels_.push_back(std::move(level));
}

void StabChain::add_generator(std::size_t index, const Permutation &g) {
  Level &level = levels_[index];
  level.gens.push_back(g);
  const std::size_t new_gen = level.gens.size() - 1;
  const std::size_t old_size = level.orbit.size();
  for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
    for (std::size_t s = pos < old_size ? new_gen : 0; s < level.gens.size();
         ++s) {
      const auto image = level.gens[s][level.orbit[pos]];
      if (level.position[image] >= 0)
        continue;
      level.position[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      Permutation u = level.transversal[pos] * level.gens[s];
      level.inverse_transversal.push_back(inverse(u));
      level.transversal.push_back(std::move(u));
      level.tested.push_back(0);
    }
  }
}

void StabChain::close(std::size_t from_level) {
  Permutation h, scratch;
  auto i = static_cast<std::ptrdiff_t>(from_level);
  while (i >= 0) {
    bool restarted = false;
    for (std::size_t pos = 0; !restarted && pos < levels_[i].orbit.size();
         ++pos) {
      while (levels_[i].tested[pos] < levels_[i].gens.size()) {
        Level &level = levels_[i];
        const std::size_t s = level.tested[pos]++;
        const auto image = level.gens[s][level.orbit[pos]];
        // Schreier generator u_pos * s * u_image^-1 fixes the base point.
        Permutation::multiply_into(level.transversal[pos], level.gens[s],
                                   scratch);
        Permutation::multiply_into(
            scratch, level.inverse_transversal[level.position[image]], h);
        const std::size_t drop = sift(h, static_cast<std::size_t>(i) + 1,
                                      scratch);
        if (drop == levels_.size() && h.is_identity())
          continue;
        if (drop == levels_.size())
          push_level(h.first_moved_point());
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= drop; ++l)
          add_generator(l, h);
        i = static_cast<std::ptrdiff_t>(drop);
        restarted = true;
        break;
      }
    }
    if (!restarted)
      --i;
  }
}

bool StabChain::insert(const Permutation &g) {
  if (g.degree() != degree_)
    throw std::invalid_argument("generator degree mismatch");
  Permutation h = g, scratch;
  const std::size_t drop = sift(h, 0, scratch);
  if (drop == levels_.size() && h.is_identity())
    return false;
  if (drop == levels_.size())
    push_level(h.first_moved_point());
  for (std::size_t l = 0; l <= drop; ++l)
    add_generator(l, h);
  close(drop);
  return true;
}

bool StabChain::contains(const Permutation &g) const {
  if (g.degree() != degree_)
    return false;
  Permutation h = g, scratch;
  return sift(h, 0, scratch) == levels_.size() && h.is_identity();
}

std::uint64_t StabChain::order() const {
  std::uint64_t order = 1;
  for (const auto &level : levels_)
    if (__builtin_mul_overflow(order, level.orbit.size(), &order))
      throw std::overflow_error("group order exceeds 64-bit range");
  return order;
}

std::vector<std::size_t> StabChain::base() const {
  std::vector<std::size_t> points;
  for (const auto &level : levels_)
    points.push_back(level.base_point);
  return points;
}

std::optional<std::uint64_t> StabChain::rank(const Permutation &g) const {
  if (g.degree() != degree_)
    return std::nullopt;
  Permutation h = g, scratch;
  std::uint64_t r = 0;
  for (const auto &level : levels_) {
    const auto pos = level.position[h[level.base_point]];
    if (pos < 0)
      return std::nullopt;
    r = r * level.orbit.size() + static_cast<std::uint64_t>(pos);
    Permutation::multiply_into(h, level.inverse_transversal[pos], scratch);
    std::swap(h, scratch);
  }
  if (!h.is_identity())
    return std::nullopt;
  return r;
}

Permutation StabChain::element(std::uint64_t rank) const {
  Permutation result(degree_), scratch;
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const auto &level = levels_[i];
    const std::uint64_t pos = rank % level.orbit.size();
    rank /= level.orbit.size();
    Permutation::multiply_into(result, level.transversal[pos], scratch);
    std::swap(result, scratch);
  }
  if (rank != 0)
    throw std::out_of_range("element rank exceeds group order");
  return result;
}

} // namespace permsolv
