#include "permsolv/classes.hpp"

#include <algorithm>
#include <numeric>

#include "permsolv/numth.hpp"

namespace permsolv {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

std::vector<ClassInfo> conjugacy_classes(const GroupHandle &group) {
  const auto &elements = group.elements();
  DisjointSets sets(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto &g : group.generators())
      sets.unite(i, group.index_of(conjugate(elements[i], g)));

  std::vector<std::size_t> slot(elements.size(), elements.size());
  std::vector<ClassInfo> classes;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] == elements.size()) {
      slot[root] = classes.size();
      classes.push_back({elements[i], 0, element_order(elements[i]), {}});
    }
    ClassInfo &c = classes[slot[root]];
    c.members.push_back(i);
    if (elements[i] < c.representative)
      c.representative = elements[i];
  }
  for (auto &c : classes)
    c.size = c.members.size();

  std::sort(classes.begin(), classes.end(),
            [](const ClassInfo &a, const ClassInfo &b) {
              if (a.order != b.order)
                return a.order < b.order;
              if (a.size != b.size)
                return a.size < b.size;
              return a.representative < b.representative;
            });
  return classes;
}

std::vector<ClassInfo> prime_power_classes(std::span<const ClassInfo> classes) {
  std::vector<ClassInfo> out;
  for (const auto &c : classes)
    if (prime_power_base(c.order))
      out.push_back(c);
  return out;
}

std::vector<ClassInfo> classes_of_prime(std::span<const ClassInfo> classes,
                                        std::uint64_t p) {
  std::vector<ClassInfo> out;
  for (const auto &c : classes)
    if (c.order > 1 && is_power_of(c.order, p))
      out.push_back(c);
  return out;
}

std::vector<Permutation> elements_of_order(const GroupHandle &group,
                                           std::uint64_t n) {
  std::vector<Permutation> out;
  for (const auto &g : group.elements())
    if (element_order(g) == n)
      out.push_back(g);
  return out;
}

std::vector<Permutation> p_elements(const GroupHandle &group,
                                    std::uint64_t p) {
  std::vector<Permutation> out;
  for (const auto &g : group.elements()) {
    const auto order = element_order(g);
    if (order > 1 && is_power_of(order, p))
      out.push_back(g);
  }
  return out;
}

} // namespace permsolv
