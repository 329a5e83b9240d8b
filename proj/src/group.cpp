#include "permsolv/group.hpp"

#include <cstdlib>
#include <mutex>

namespace permsolv {

struct GroupHandle::Cache {
  std::once_flag once;
  std::vector<Permutation> elements;
};

Limits &limits() {
  static Limits instance;
  return instance;
}

namespace {

void read_cap(const char *variable, std::uint64_t &target) {
  const char *value = std::getenv(variable);
  if (value == nullptr)
    return;
  std::string text(value);
  std::size_t used = 0;
  unsigned long long parsed = 0;
  try {
    parsed = std::stoull(text, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != text.size() || parsed == 0 || text[0] == '-')
    throw std::invalid_argument(std::string(variable) +
                                " must be a positive integer");
  target = parsed;
}

} // namespace

void load_limits_from_env() {
  read_cap("ENUM_CAP", limits().enum_cap);
  read_cap("PAIR_CAP", limits().pair_cap);
  read_cap("SIEVE_CAP", limits().sieve_cap);
}

void require_enumerable(const GroupHandle &group, const char *operation) {
  if (group.order() > limits().enum_cap)
    throw CapExceeded(std::string(operation) + ": group " + group.name() +
                      " has order " + std::to_string(group.order()) +
                      " above the enumeration cap " +
                      std::to_string(limits().enum_cap));
}

const std::vector<Permutation> &GroupHandle::elements() const {
  require_enumerable(*this, "enumerate_elements");
  std::call_once(cache_->once, [this] {
    auto &out = cache_->elements;
    out.reserve(order_);
    for_each_element(*this, 0, order_,
                     [&](std::uint64_t, Permutation p) {
                       out.push_back(std::move(p));
                     });
  });
  return cache_->elements;
}

std::uint64_t GroupHandle::index_of(const Permutation &p) const {
  auto r = chain_->rank(p);
  if (!r)
    throw std::invalid_argument("permutation is not a member of " + name_);
  return *r;
}

GroupHandle build_group(std::string name, std::size_t degree,
                        std::vector<Permutation> generators) {
  if (generators.empty())
    throw std::invalid_argument("group " + name + " needs a generator");
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator of degree " +
                                  std::to_string(g.degree()) + " in group " +
                                  name + " of degree " +
                                  std::to_string(degree));
  GroupHandle group;
  group.name_ = std::move(name);
  group.degree_ = degree;
  group.chain_ = std::make_shared<const StabChain>(degree, generators);
  group.generators_ = std::move(generators);
  group.order_ = group.chain_->order();
  group.cache_ = std::make_shared<GroupHandle::Cache>();
  return group;
}

GroupHandle build_group_from_cycles(std::string name, std::size_t degree,
                                    const std::vector<std::string> &cycles) {
  std::vector<Permutation> gens;
  for (const auto &c : cycles)
    gens.push_back(parse_cycles(c, degree));
  return build_group(std::move(name), degree, std::move(gens));
}

std::vector<Permutation> enumerate_elements(const GroupHandle &group) {
  return group.elements();
}

std::uint64_t subgroup_order(std::span<const Permutation> gens) {
  if (gens.empty())
    return 1;
  return StabChain(gens.front().degree(), gens).order();
}

} // namespace permsolv
