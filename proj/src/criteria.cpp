#include "permsolv/criteria.hpp"

#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <unordered_set>

#include "permsolv/classes.hpp"
#include "permsolv/numth.hpp"

namespace permsolv {

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::holds ? "holds" : "fails";
}

const Permutation &CriterionReport::witness_element(std::string_view role) const {
  for (const auto &w : witness)
    if (w.role == role)
      return w.element;
  throw std::out_of_range("report has no witness element " + std::string(role));
}

std::string CriterionReport::detail(std::string_view key) const {
  for (const auto &[k, v] : details)
    if (k == key)
      return v;
  return {};
}

FamilyPredicate solvable_family() {
  return {"solvable",
          [](std::span<const Permutation> gens, const StabChain &) {
            return is_solvable(gens).solvable;
          },
          true, true, true};
}

FamilyPredicate pi_family(std::set<std::uint64_t> primes) {
  std::string id = "pi:";
  bool first = true;
  for (auto p : primes) {
    if (!is_prime(p))
      throw std::invalid_argument("pi family needs primes, got " +
                                  std::to_string(p));
    id += (first ? "" : ",") + std::to_string(p);
    first = false;
  }
  return {id,
          [primes = std::move(primes)](std::span<const Permutation>,
                                       const StabChain &chain) {
            return is_pi_group(chain.order(), primes);
          },
          true, true, true};
}

FamilyPredicate odd_order_family() {
  return {"odd",
          [](std::span<const Permutation>, const StabChain &chain) {
            return chain.order() % 2 == 1;
          },
          true, true, true};
}

FamilyPredicate family_from_id(std::string_view id) {
  if (id == "solvable")
    return solvable_family();
  if (id == "odd")
    return odd_order_family();
  if (id.starts_with("pi:")) {
    std::set<std::uint64_t> primes;
    std::string rest(id.substr(3));
    std::size_t start = 0;
    while (start <= rest.size()) {
      const std::size_t comma = rest.find(',', start);
      const std::string token =
          rest.substr(start, comma == std::string::npos ? std::string::npos
                                                        : comma - start);
      std::size_t used = 0;
      std::uint64_t p = 0;
      try {
        p = std::stoull(token, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (token.empty() || used != token.size())
        throw std::invalid_argument("malformed prime list in family '" +
                                    std::string(id) + "'");
      primes.insert(p);
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
    return pi_family(std::move(primes));
  }
  throw std::invalid_argument("unknown family '" + std::string(id) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::uint64_t tests = 0;
  std::uint64_t subgroups = 0;
  std::vector<NamedElement> assignment;
};

struct Scan {
  std::optional<std::size_t> first_failure;
  std::vector<Outcome> outcomes;
  CriterionStats stats;
};

// Evaluates work items until the first failure in index order; stats cover
// the items up to and including that failure, which makes them independent
// of the schedule.
template <class Eval> Scan run_scan(std::size_t n, Eval &&eval, Exec exec) {
  Scan scan;
  scan.outcomes.resize(n);
  scan.first_failure = find_first(
      n,
      [&](std::size_t i) {
        scan.outcomes[i] = eval(i);
        return !scan.outcomes[i].ok;
      },
      exec);
  const std::size_t end = scan.first_failure ? *scan.first_failure + 1 : n;
  for (std::size_t i = 0; i < end; ++i) {
    scan.stats.pairs_tested += scan.outcomes[i].tests;
    scan.stats.subgroups_generated += scan.outcomes[i].subgroups;
  }
  return scan;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Index of the first g (rank order) with pred(y^g), skipping conjugators
// that repeat an already tested conjugate.
template <class Pred>
std::optional<std::size_t>
first_conjugate(const std::vector<Permutation> &elements, const Permutation &y,
                Pred &&pred, std::uint64_t &tests) {
  std::unordered_set<Permutation> seen;
  for (std::size_t g = 0; g < elements.size(); ++g) {
    Permutation yg = conjugate(y, elements[g]);
    if (!seen.insert(yg).second)
      continue;
    ++tests;
    if (pred(yg))
      return g;
  }
  return std::nullopt;
}

CriterionReport make_report(std::string name, Scan &scan,
                            Clock::time_point start,
                            const CheckOptions &options) {
  CriterionReport report;
  report.criterion = std::move(name);
  report.verdict = scan.first_failure ? Verdict::fails : Verdict::holds;
  report.stats = scan.stats;
  if (options.record_assignments && !scan.first_failure)
    for (auto &o : scan.outcomes)
      if (!o.assignment.empty())
        report.assignments.push_back(std::move(o.assignment));
  report.stats.wall_time_ms = elapsed_ms(start);
  return report;
}

std::vector<Permutation> class_representatives(
    std::span<const ClassInfo> classes) {
  std::vector<Permutation> reps;
  for (const auto &c : classes)
    reps.push_back(c.representative);
  return reps;
}

std::vector<Permutation> prime_power_elements(const GroupHandle &group) {
  std::vector<Permutation> out;
  for (const auto &g : group.elements())
    if (prime_power_base(element_order(g)))
      out.push_back(g);
  return out;
}

// For all x in xs, y in ys: some g with <x, y^g> solvable.
CriterionReport existential_solvable_check(std::string name,
                                           const GroupHandle &group,
                                           const std::vector<Permutation> &xs,
                                           const std::vector<Permutation> &ys,
                                           const CheckOptions &options,
                                           Clock::time_point start) {
  const auto &elements = group.elements();
  auto scan = run_scan(
      xs.size() * ys.size(),
      [&](std::size_t i) {
        const auto &x = xs[i / ys.size()];
        const auto &y = ys[i % ys.size()];
        Outcome o;
        auto g = first_conjugate(
            elements, y,
            [&](const Permutation &yg) { return generates_solvable(x, yg); },
            o.tests);
        o.subgroups = o.tests;
        o.ok = g.has_value();
        if (o.ok && options.record_assignments)
          o.assignment = {{"x", x}, {"y", y}, {"g", elements[*g]}};
        return o;
      },
      options.exec);
  auto report = make_report(std::move(name), scan, start, options);
  if (scan.first_failure) {
    const std::size_t i = *scan.first_failure;
    report.witness = {{"x", xs[i / ys.size()]}, {"y", ys[i % ys.size()]}};
    report.details = {{"x_order", std::to_string(element_order(xs[i / ys.size()]))},
                      {"y_order", std::to_string(element_order(ys[i % ys.size()]))},
                      {"reason", "no conjugator gives a solvable subgroup"}};
  }
  return report;
}

// For each listed class pair (C, D): some x in C, y in D with pred(x, y).
template <class Pred>
CriterionReport class_pair_check(
    std::string name, const GroupHandle &group,
    std::span<const ClassInfo> classes,
    const std::vector<std::pair<std::size_t, std::size_t>> &pairs, Pred &&pred,
    const CheckOptions &options, Clock::time_point start) {
  const auto &elements = group.elements();
  auto scan = run_scan(
      pairs.size(),
      [&](std::size_t i) {
        const ClassInfo &c = classes[pairs[i].first];
        const ClassInfo &d = classes[pairs[i].second];
        Outcome o;
        o.ok = false;
        auto try_pair = [&](const Permutation &x, const Permutation &y) {
          ++o.tests;
          ++o.subgroups;
          if (pred(x, y)) {
            o.ok = true;
            if (options.record_assignments)
              o.assignment = {{"x", x}, {"y", y}};
          }
          return o.ok;
        };
        if (options.reduce) {
          for (auto r : d.members)
            if (try_pair(c.representative, elements[r]))
              break;
        } else {
          for (auto rx : c.members) {
            bool found = false;
            for (auto ry : d.members)
              if ((found = try_pair(elements[rx], elements[ry])))
                break;
            if (found)
              break;
          }
        }
        return o;
      },
      options.exec);
  auto report = make_report(std::move(name), scan, start, options);
  if (scan.first_failure) {
    const auto &[ci, di] = pairs[*scan.first_failure];
    report.witness = {{"x", classes[ci].representative},
                      {"y", classes[di].representative}};
    report.details = {{"x_class", std::to_string(ci)},
                      {"x_order", std::to_string(classes[ci].order)},
                      {"x_class_size", std::to_string(classes[ci].size)},
                      {"y_class", std::to_string(di)},
                      {"y_order", std::to_string(classes[di].order)},
                      {"y_class_size", std::to_string(classes[di].size)}};
  }
  return report;
}

struct PrimeElement {
  Permutation element;
  std::uint64_t prime;
};

std::vector<PrimeElement> prime_elements(const GroupHandle &group,
                                         const CheckOptions &options) {
  std::vector<PrimeElement> out;
  if (options.reduce) {
    for (const auto &c : prime_power_classes(conjugacy_classes(group)))
      out.push_back({c.representative, *prime_power_base(c.order)});
  } else {
    for (const auto &g : group.elements())
      if (auto p = prime_power_base(element_order(g)))
        out.push_back({g, *p});
  }
  return out;
}

// For p-element x and q-element y (p != q): some g with pred(x, y^g, p, q).
template <class Pred>
CriterionReport mixed_prime_check(std::string name, const GroupHandle &group,
                                  Pred &&pred, bool builds_subgroups,
                                  const CheckOptions &options,
                                  Clock::time_point start) {
  const auto &elements = group.elements();
  const auto entries = prime_elements(group, options);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (entries[i].prime != entries[j].prime)
        pairs.emplace_back(i, j);

  auto scan = run_scan(
      pairs.size(),
      [&](std::size_t k) {
        const auto &x = entries[pairs[k].first];
        const auto &y = entries[pairs[k].second];
        Outcome o;
        auto g = first_conjugate(
            elements, y.element,
            [&](const Permutation &yg) {
              return pred(x.element, yg, x.prime, y.prime);
            },
            o.tests);
        if (builds_subgroups)
          o.subgroups = o.tests;
        o.ok = g.has_value();
        if (o.ok && options.record_assignments)
          o.assignment = {{"x", x.element}, {"y", y.element}, {"g", elements[*g]}};
        return o;
      },
      options.exec);
  auto report = make_report(std::move(name), scan, start, options);
  if (scan.first_failure) {
    const auto &x = entries[pairs[*scan.first_failure].first];
    const auto &y = entries[pairs[*scan.first_failure].second];
    report.witness = {{"x", x.element}, {"y", y.element}};
    report.details = {{"p", std::to_string(x.prime)},
                      {"q", std::to_string(y.prime)},
                      {"x_order", std::to_string(element_order(x.element))},
                      {"y_order", std::to_string(element_order(y.element))}};
  }
  return report;
}

bool pi_subgroup(const Permutation &x, const Permutation &y, std::uint64_t p,
                 std::uint64_t q) {
  const Permutation gens[] = {x, y};
  return is_pi_group(StabChain(x.degree(), gens).order(), {p, q});
}

std::uint64_t detail_number(const CriterionReport &report,
                            std::string_view key) {
  return std::stoull(report.detail(key));
}

} // namespace

CriterionReport thompson_check(const GroupHandle &group,
                               const CheckOptions &options) {
  const auto start = Clock::now();
  const auto &elements = group.elements();
  const std::vector<Permutation> xs =
      options.reduce ? class_representatives(conjugacy_classes(group))
                     : elements;
  const std::size_t m = elements.size();
  auto scan = run_scan(
      xs.size() * m,
      [&](std::size_t i) {
        Outcome o;
        o.tests = o.subgroups = 1;
        o.ok = generates_solvable(xs[i / m], elements[i % m]);
        return o;
      },
      options.exec);
  auto report = make_report("thompson", scan, start, options);
  if (scan.first_failure) {
    const auto &x = xs[*scan.first_failure / m];
    const auto &y = elements[*scan.first_failure % m];
    std::uint64_t order = 0;
    generates_solvable(x, y, &order);
    report.witness = {{"x", x}, {"y", y}};
    report.details = {{"subgroup_order", std::to_string(order)}};
  }
  return report;
}

CriterionReport thmA_condition2(const GroupHandle &group,
                                const CheckOptions &options) {
  const auto start = Clock::now();
  const std::vector<Permutation> xs =
      options.reduce ? class_representatives(conjugacy_classes(group))
                     : group.elements();
  return existential_solvable_check("thmA2", group, xs, xs, options, start);
}

CriterionReport thmA_condition3(const GroupHandle &group,
                                const CheckOptions &options) {
  const auto start = Clock::now();
  const std::vector<Permutation> xs =
      options.reduce
          ? class_representatives(prime_power_classes(conjugacy_classes(group)))
          : prime_power_elements(group);
  return existential_solvable_check("thmA3", group, xs, xs, options, start);
}

CriterionReport thmAprime_check(const GroupHandle &group,
                                const CheckOptions &options) {
  const auto start = Clock::now();
  const auto classes = prime_power_classes(conjugacy_classes(group));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t d = c + 1; d < classes.size(); ++d)
      pairs.emplace_back(c, d);
  return class_pair_check(
      "thmAprime", group, classes, pairs,
      [](const Permutation &x, const Permutation &y) {
        return generates_solvable(x, y);
      },
      options, start);
}

CriterionReport corE_check(const GroupHandle &group,
                           const CheckOptions &options) {
  const auto start = Clock::now();
  return mixed_prime_check(
      "corE", group,
      [](const Permutation &x, const Permutation &yg, std::uint64_t,
         std::uint64_t) { return commute(x, yg); },
      false, options, start);
}

CriterionReport corF_check(const GroupHandle &group,
                           const CheckOptions &options) {
  const auto start = Clock::now();
  return mixed_prime_check("corF", group, pi_subgroup, true, options, start);
}

CriterionReport thmC_check(const GroupHandle &group,
                           const FamilyPredicate &family,
                           const CheckOptions &options) {
  if (!family.fully_closed())
    throw FamilyHypothesisError(
        "family '" + family.id +
        "' must be closed under subgroups, quotients and extensions");
  const auto start = Clock::now();
  const auto classes = conjugacy_classes(group);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t d = c; d < classes.size(); ++d)
      pairs.emplace_back(c, d);
  auto report = class_pair_check(
      "thmC", group, classes, pairs,
      [&](const Permutation &x, const Permutation &y) {
        const Permutation gens[] = {x, y};
        return family.contains(gens, StabChain(x.degree(), gens));
      },
      options, start);
  report.details.insert(report.details.begin(), {"family", family.id});
  return report;
}

CriterionReport same_class_check(const GroupHandle &group,
                                 const CheckOptions &options) {
  const auto start = Clock::now();
  const auto &elements = group.elements();
  const auto classes = conjugacy_classes(group);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const auto &c : classes) {
    if (options.reduce) {
      const auto rep = group.index_of(c.representative);
      for (auto r : c.members)
        pairs.emplace_back(rep, r);
    } else {
      for (auto a : c.members)
        for (auto b : c.members)
          pairs.emplace_back(a, b);
    }
  }
  auto scan = run_scan(
      pairs.size(),
      [&](std::size_t i) {
        Outcome o;
        o.tests = o.subgroups = 1;
        o.ok = generates_solvable(elements[pairs[i].first],
                                  elements[pairs[i].second]);
        return o;
      },
      options.exec);
  auto report = make_report("same-class", scan, start, options);
  if (scan.first_failure) {
    const auto &x = elements[pairs[*scan.first_failure].first];
    const auto &y = elements[pairs[*scan.first_failure].second];
    std::uint64_t order = 0;
    generates_solvable(x, y, &order);
    report.witness = {{"x", x}, {"y", y}};
    report.details = {{"class_order", std::to_string(element_order(x))},
                      {"subgroup_order", std::to_string(order)}};
  }
  return report;
}

CriterionReport kaplan_levy_check(const GroupHandle &group,
                                  const CheckOptions &options) {
  const auto start = Clock::now();
  std::vector<Permutation> xs;
  if (options.reduce) {
    for (const auto &c : prime_power_classes(conjugacy_classes(group)))
      if (*prime_power_base(c.order) > 3)
        xs.push_back(c.representative);
  } else {
    for (const auto &g : group.elements())
      if (auto p = prime_power_base(element_order(g)); p && *p > 3)
        xs.push_back(g);
  }
  const auto ys = p_elements(group, 2);
  auto scan = run_scan(
      xs.size() * ys.size(),
      [&](std::size_t i) {
        const auto &x = xs[i / ys.size()];
        Outcome o;
        o.tests = o.subgroups = 1;
        o.ok = generates_solvable(x, conjugate(x, ys[i % ys.size()]));
        return o;
      },
      options.exec);
  auto report = make_report("kaplan-levy", scan, start, options);
  if (scan.first_failure) {
    const auto &x = xs[*scan.first_failure / ys.size()];
    const auto &y = ys[*scan.first_failure % ys.size()];
    std::uint64_t order = 0;
    generates_solvable(x, conjugate(x, y), &order);
    report.witness = {{"x", x}, {"y", y}};
    report.details = {{"x_order", std::to_string(element_order(x))},
                      {"y_order", std::to_string(element_order(y))},
                      {"subgroup_order", std::to_string(order)}};
  }
  return report;
}

ProportionResult proportion_solvable_pairs(const GroupHandle &group,
                                           const ProportionMode &mode,
                                           const CheckOptions &options) {
  const auto start = Clock::now();
  const std::uint64_t n = group.order();
  ProportionResult result;
  if (!mode.sampled) {
    if (n > limits().pair_cap / n)
      throw CapExceeded("proportion: " + std::to_string(n) + "^2 pairs exceed "
                        "the pair cap " + std::to_string(limits().pair_cap));
    const auto &elements = group.elements();
    result.total_pairs = n * n;
    result.solvable_pairs = count_if(
        result.total_pairs,
        [&](std::size_t i) {
          return generates_solvable(elements[i / n], elements[i % n]);
        },
        options.exec);
  } else {
    if (mode.samples == 0 || mode.samples > limits().pair_cap)
      throw CapExceeded("proportion: sample count must lie in 1.." +
                        std::to_string(limits().pair_cap));
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> samples(mode.samples);
    for (auto &s : samples) {
      s.first = pick(rng);
      s.second = pick(rng);
    }
    result.total_pairs = mode.samples;
    result.solvable_pairs = count_if(
        samples.size(),
        [&](std::size_t i) {
          return generates_solvable(group.element(samples[i].first),
                                    group.element(samples[i].second));
        },
        options.exec);
  }
  const std::uint64_t d = std::gcd(result.solvable_pairs, result.total_pairs);
  result.fraction = {result.solvable_pairs / d, result.total_pairs / d};
  result.exceeds_threshold =
      static_cast<unsigned __int128>(result.solvable_pairs) *
          kSolvablePairThreshold.denominator >
      static_cast<unsigned __int128>(result.total_pairs) *
          kSolvablePairThreshold.numerator;

  auto &report = result.report;
  report.criterion = "proportion";
  report.verdict = result.exceeds_threshold ? Verdict::holds : Verdict::fails;
  report.details = {
      {"mode", mode.sampled ? "sampled" : "exhaustive"},
      {"solvable_pairs", std::to_string(result.solvable_pairs)},
      {"total_pairs", std::to_string(result.total_pairs)},
      {"fraction", std::to_string(result.fraction.numerator) + "/" +
                       std::to_string(result.fraction.denominator)},
      {"threshold", "11/30"},
      {"exceeds_threshold", result.exceeds_threshold ? "true" : "false"}};
  if (mode.sampled) {
    report.details.emplace_back("samples", std::to_string(mode.samples));
    report.details.emplace_back("seed", std::to_string(mode.seed));
  }
  report.stats.pairs_tested = result.total_pairs;
  report.stats.subgroups_generated = result.total_pairs;
  report.stats.wall_time_ms = elapsed_ms(start);
  return result;
}

ProbeResult radical_conjecture_probe(const GroupHandle &group,
                                     const Permutation &x,
                                     const SolvableRadical &radical,
                                     const CheckOptions &options) {
  const auto &elements = group.elements();
  const auto reps = class_representatives(conjugacy_classes(group));
  const auto failing = find_first(
      reps.size(),
      [&](std::size_t i) {
        std::uint64_t tests = 0;
        return !first_conjugate(
                    elements, reps[i],
                    [&](const Permutation &yg) {
                      return generates_solvable(x, yg);
                    },
                    tests)
                    .has_value();
      },
      options.exec);
  ProbeResult result;
  result.satisfies_existential = !failing.has_value();
  result.in_radical = radical.contains_rank(group.index_of(x));
  return result;
}

ProbeResult radical_conjecture_probe(const GroupHandle &group,
                                     const Permutation &x,
                                     const CheckOptions &options) {
  return radical_conjecture_probe(group, x,
                                  solvable_radical(group, options.exec),
                                  options);
}

bool replay_failure(const GroupHandle &group, const CriterionReport &report) {
  if (report.holds())
    return false;
  const std::string &id = report.criterion;
  if (id == "proportion") {
    ProportionMode mode;
    if (report.detail("mode") == "sampled")
      mode = ProportionMode::sample(detail_number(report, "samples"),
                                    detail_number(report, "seed"));
    return !proportion_solvable_pairs(group, mode, {Exec::serial})
                .exceeds_threshold;
  }

  const Permutation &x = report.witness_element("x");
  const Permutation &y = report.witness_element("y");
  const auto &elements = group.elements();
  auto no_conjugate = [&](auto &&pred) {
    std::uint64_t tests = 0;
    return !first_conjugate(elements, y, pred, tests).has_value();
  };

  if (id == "thompson" || id == "same-class")
    return !generates_solvable(x, y);
  if (id == "kaplan-levy")
    return !generates_solvable(x, conjugate(x, y));
  if (id == "thmA2" || id == "thmA3" || id == "thmAprime")
    return no_conjugate(
        [&](const Permutation &yg) { return generates_solvable(x, yg); });
  if (id == "corE")
    return no_conjugate([&](const Permutation &yg) { return commute(x, yg); });
  if (id == "corF") {
    const auto p = detail_number(report, "p");
    const auto q = detail_number(report, "q");
    return no_conjugate(
        [&](const Permutation &yg) { return pi_subgroup(x, yg, p, q); });
  }
  if (id == "thmC") {
    const auto family = family_from_id(report.detail("family"));
    return no_conjugate([&](const Permutation &yg) {
      const Permutation gens[] = {x, yg};
      return family.contains(gens, StabChain(x.degree(), gens));
    });
  }
  throw std::invalid_argument("replay_failure: unknown criterion " + id);
}

} // namespace permsolv
