#include "permsolv/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <map>

#include "permsolv/atlas.hpp"
#include "permsolv/classes.hpp"
#include "permsolv/criteria.hpp"
#include "permsolv/numth.hpp"
#include "permsolv/report.hpp"
#include "permsolv/structure.hpp"
#include "permsolv/witness.hpp"

namespace permsolv {

namespace {

struct Settings {
  std::string format = "text";
  std::string exec = "parallel";
  bool full = false;
  bool timing = false;
};

struct Arguments {
  std::string group;
  std::string family;
  std::string name;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t order = 0;
  bool verify = false;
};

struct Result {
  Record record;
  int code = kExitHolds;
};

using Handler = std::function<Result(const Settings &, const Arguments &)>;

std::string join(const std::vector<std::uint64_t> &values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

std::string fixed(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

CheckOptions check_options(const Settings &s) {
  CheckOptions o;
  o.exec = s.exec == "serial" ? Exec::serial : Exec::parallel;
  o.reduce = !s.full;
  return o;
}

WitnessOptions witness_options(const Settings &s) {
  WitnessOptions o;
  o.exec = s.exec == "serial" ? Exec::serial : Exec::parallel;
  o.reduce = !s.full;
  return o;
}

Result criterion_result(const CriterionReport &report, const Settings &s) {
  return {to_record(report, s.timing), report.holds() ? kExitHolds : kExitFails};
}

Record group_header(const GroupHandle &g) {
  Record r;
  r.add("group", g.name());
  r.add("degree", std::uint64_t(g.degree()));
  r.add("order", g.order());
  return r;
}

Result run_order(const Settings &, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  Record r = group_header(g);
  r.add("base_length", std::uint64_t(g.chain().base_length()));
  return {r, kExitHolds};
}

Result run_census(const Settings &, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  Record r = group_header(g);
  for (const auto &[o, n] : order_census(g).counts)
    r.add("census." + std::to_string(o), n);
  return {r, kExitHolds};
}

Result run_classes(const Settings &, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  const auto classes = conjugacy_classes(g);
  Record r = group_header(g);
  r.add("classes", std::uint64_t(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string key = "class." + std::to_string(i + 1) + ".";
    r.add(key + "order", classes[i].order);
    r.add(key + "size", classes[i].size);
    r.add(key + "representative", classes[i].representative);
  }
  return {r, kExitHolds};
}

Result run_is_solvable(const Settings &, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  const auto series = is_solvable(g);
  Record r = group_header(g);
  r.add("solvable", series.solvable);
  r.add("derived_series", join(series.lengths));
  if (series.derived_length)
    r.add("derived_length", std::uint64_t(*series.derived_length));
  return {r, series.solvable ? kExitHolds : kExitFails};
}

Result run_is_nilpotent(const Settings &, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  const bool nilpotent = is_nilpotent(g);
  Record r = group_header(g);
  r.add("nilpotent", nilpotent);
  return {r, nilpotent ? kExitHolds : kExitFails};
}

Result run_radical(const Settings &s, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  const auto radical = solvable_radical(g, check_options(s).exec);
  Record r = group_header(g);
  r.add("radical_order", std::uint64_t(radical.elements.size()));
  for (std::size_t i = 0; i < radical.generators.size(); ++i)
    r.add("radical_generator." + std::to_string(i + 1), radical.generators[i]);
  return {r, kExitHolds};
}

Handler criterion(CriterionReport (*check)(const GroupHandle &,
                                           const CheckOptions &)) {
  return [check](const Settings &s, const Arguments &a) {
    const auto g = resolve_group_argument(a.group);
    return criterion_result(check(g, check_options(s)), s);
  };
}

Result run_thmC(const Settings &s, const Arguments &a) {
  const auto family = family_from_id(a.family);
  const auto g = resolve_group_argument(a.group);
  return criterion_result(thmC_check(g, family, check_options(s)), s);
}

Result run_proportion(const Settings &s, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  const auto mode = a.samples ? ProportionMode::sample(a.samples, a.seed)
                              : ProportionMode::exhaustive();
  const auto result = proportion_solvable_pairs(g, mode, check_options(s));
  return criterion_result(result.report, s);
}

Result run_probe(const Settings &s, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  const auto options = check_options(s);
  const auto radical = solvable_radical(g, options.exec);
  Record r = group_header(g);
  r.add("element_order", a.order);
  std::uint64_t probed = 0, counterexamples = 0;
  Record probes;
  for (const auto &c : conjugacy_classes(g)) {
    if (c.order != a.order)
      continue;
    const auto probe =
        radical_conjecture_probe(g, c.representative, radical, options);
    const bool counterexample = probe.satisfies_existential && !probe.in_radical;
    const std::string key = "probe." + std::to_string(++probed) + ".";
    probes.add(key + "representative", c.representative);
    probes.add(key + "satisfies_existential", probe.satisfies_existential);
    probes.add(key + "in_radical", probe.in_radical);
    probes.add(key + "counterexample", counterexample);
    counterexamples += counterexample;
  }
  r.add("classes_probed", probed);
  r.add("counterexamples", counterexamples);
  r.append(probes);
  return {r, counterexamples ? kExitFails : kExitHolds};
}

Result run_verify_pair(const Settings &s, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  const auto verdict = verify_prime_pair(g, a.a, a.b, witness_options(s));
  Record r = group_header(g);
  r.append(to_record(verdict));
  return {r, verdict.all_nonsolvable() ? kExitHolds : kExitFails};
}

Result run_find_pair(const Settings &s, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  const auto search = find_witness_pair(g, witness_options(s));
  Record r = group_header(g);
  r.add("found", search.pair.has_value());
  for (std::size_t i = 0; i < search.tried.size(); ++i) {
    const auto &t = search.tried[i];
    r.add("tried." + std::to_string(i + 1), std::to_string(t.a) + "," +
                                                std::to_string(t.b) + " " +
                                                std::string(to_string(t.result)));
  }
  if (search.verdict)
    r.append(to_record(*search.verdict));
  return {r, search.pair ? kExitHolds : kExitFails};
}

Result run_lemma31(const Settings &, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  const auto witness = lemma31_witness(g, a.a, a.b);
  Record r = group_header(g);
  r.add("p", a.a);
  r.add("q", a.b);
  r.add("found", witness.has_value());
  if (witness) {
    r.add("witness.x", witness->x);
    r.add("witness.y", witness->y);
    r.add("subgroup_order", witness->order);
    for (const auto &[o, n] : witness->census.counts)
      r.add("census." + std::to_string(o), n);
  }
  return {r, witness ? kExitHolds : kExitFails};
}

void add_lemma32(Record &r, const Lemma32Report &l) {
  r.add("p", l.p);
  r.add("q", l.q);
  r.add("s", std::uint64_t(l.s));
  r.add("sylow_q_cyclic", l.sylow_q_cyclic);
  r.add("p_not_dividing_q_minus_1", l.p_not_dividing_q_minus_1);
  r.add("q_not_dividing_p_powers_minus_1", l.q_not_dividing_p_powers_minus_1);
  r.add("no_element_of_order_pq", l.no_element_of_order_pq);
  r.add("hypotheses_hold", l.hypotheses_hold);
  r.add("oracle_no_solvable_pair", l.oracle_no_solvable_pair);
  if (l.oracle_counterexample) {
    r.add("oracle.x", l.oracle_counterexample->first);
    r.add("oracle.y", l.oracle_counterexample->second);
  }
  r.add("oracle_pairs_checked", l.oracle_pairs_checked);
  r.add("implication_holds", l.implication_holds);
}

Result run_lemma32(const Settings &s, const Arguments &a) {
  const auto g = resolve_group_argument(a.group);
  const auto l = lemma32_hypotheses(g, a.a, a.b, witness_options(s));
  Record r = group_header(g);
  add_lemma32(r, l);
  if (!l.implication_holds)
    return {r, kExitEngine};
  return {r, l.hypotheses_hold ? kExitHolds : kExitFails};
}

Result run_sporadic(const Settings &s, const Arguments &a) {
  const auto &entry = sporadic_table(a.name);
  const auto arith = sporadic_arithmetic(entry);
  Record r;
  r.add("group", std::string(entry.name));
  r.add("p", entry.p);
  r.add("p_sylow_order", entry.p_sylow_order);
  r.add("q", entry.q);
  r.add("q_sylow_order", entry.q_sylow_order);
  r.add("sylow_orders_match", arith.sylow_orders_match);
  r.add("p_not_dividing_q_minus_1", arith.p_not_dividing_q_minus_1);
  r.add("q_not_dividing_p_powers_minus_1",
        arith.q_not_dividing_p_powers_minus_1);
  r.add("sylow_q_cyclic", arith.q_sylow_cyclic_by_order
                              ? std::string("true")
                              : std::string("unverified"));
  if (!a.verify) {
    r.add("no_element_of_order_pq", "unverified");
    return {r, kExitHolds};
  }
  const auto keys = fixed_catalog_keys();
  if (std::find(keys.begin(), keys.end(), a.name) == keys.end())
    throw CapExceeded("sporadic verification refused: " + a.name +
                      " has no permutation representation within the "
                      "enumeration cap");
  const auto g = catalog_lookup(a.name);
  const auto opts = witness_options(s);
  const auto l = lemma32_hypotheses(g, entry.p, entry.q, opts);
  const auto verdict = verify_prime_pair(g, entry.p, entry.q, opts);
  Record checks;
  add_lemma32(checks, l);
  r.append(checks, "lemma.");
  r.append(to_record(verdict));
  if (!l.implication_holds)
    return {r, kExitEngine};
  return {r, verdict.all_nonsolvable() && l.hypotheses_hold ? kExitHolds
                                                            : kExitFails};
}

Result run_verify_alt(const Settings &s, const Arguments &a) {
  const auto report = verify_alternating(a.a, witness_options(s));
  Record r;
  r.add("n", report.n);
  r.append(to_record(report.verdict));
  r.add("dichotomy_holds", report.dichotomy_holds);
  r.add("dichotomy_violations", report.dichotomy_violations);
  for (const auto &[shape, count] : report.shapes)
    r.add("shape.d" + std::to_string(shape.first) + ".order" +
              std::to_string(shape.second),
          count);
  r.add("passed", report.passed());
  return {r, report.passed() ? kExitHolds : kExitFails};
}

Result run_zsigmondy(const Settings &, const Arguments &a) {
  if (a.a < 2 || a.b < 1)
    throw std::invalid_argument("zsigmondy needs q >= 2 and e >= 1");
  const auto ppd =
      primitive_prime_divisors(a.a, static_cast<unsigned>(a.b));
  const bool exception =
      a.b >= 2 && zsigmondy_exception(a.a, static_cast<unsigned>(a.b));
  Record r;
  r.add("q", a.a);
  r.add("e", a.b);
  r.add("primitive_prime_divisors", join(ppd));
  r.add("result", ppd.empty() ? (exception ? "exception" : "empty") : "ppd");
  return {r, ppd.empty() ? kExitFails : kExitHolds};
}

Result run_alt_primes(const Settings &, const Arguments &a) {
  if (a.a < 5)
    throw std::invalid_argument("alt-primes needs n >= 5");
  const auto [p, q] = alt_prime_selection(a.a);
  Record r;
  r.add("n", a.a);
  r.add("p", p);
  r.add("q", q);
  return {r, kExitHolds};
}

Result run_pi_gap(const Settings &, const Arguments &a) {
  const auto gap = prime_count_gap_check(a.a);
  Record r;
  r.add("m", gap.m);
  r.add("pi_2m", gap.pi_2m);
  r.add("pi_m", gap.pi_m);
  r.add("gap", gap.pi_2m - gap.pi_m);
  r.add("bound", fixed(gap.bound));
  r.add("satisfied", gap.satisfied);
  return {r, gap.satisfied ? kExitHolds : kExitFails};
}

} // namespace

int cli_dispatch(int argc, const char *const *argv, std::ostream &out,
                 std::ostream &err) {
  CLI::App app{"Solvability criteria and prime-pair witnesses for finite "
               "permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  Arguments args;
  app.add_option("--format", settings.format, "Report format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--exec", settings.exec, "Scan kernel policy")
      ->check(CLI::IsMember({"serial", "parallel"}));
  app.add_flag("--full", settings.full,
               "Quantify over all elements instead of class representatives");
  app.add_flag("--timing", settings.timing, "Include wall time in reports");

  std::map<const CLI::App *, Handler> handlers;
  auto group_command = [&](const std::string &name, const std::string &help,
                           Handler handler) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("group", args.group, "Group file or catalog:<key>")
        ->required();
    handlers[sub] = std::move(handler);
    return sub;
  };
  auto number_command = [&](const std::string &name, const std::string &help,
                            Handler handler) {
    auto *sub = app.add_subcommand(name, help);
    handlers[sub] = std::move(handler);
    return sub;
  };

  group_command("order", "Group order", run_order);
  group_command("census", "Element-order census", run_census);
  group_command("classes", "Conjugacy classes", run_classes);
  group_command("is-solvable", "Derived series test", run_is_solvable);
  group_command("is-nilpotent", "Nilpotency test", run_is_nilpotent);
  group_command("radical", "Solvable radical", run_radical);
  group_command("check-thompson", "Every pair generates a solvable group",
                criterion(thompson_check));
  group_command("check-thmA2", "For all x, y some <x, y^g> is solvable",
                criterion(thmA_condition2));
  group_command("check-thmA3",
                "As check-thmA2 over elements of prime power order",
                criterion(thmA_condition3));
  group_command("check-thmAprime",
                "Distinct prime-power classes admit a solvable pair",
                criterion(thmAprime_check));
  group_command("check-corE", "p- and q-elements commute up to conjugacy",
                criterion(corE_check));
  group_command("check-corF", "Some <x, y^g> is a {p,q}-group",
                criterion(corF_check));
  group_command("check-thmC", "Class pairs generate a member of the family",
                run_thmC)
      ->add_option("--family", args.family, "solvable, odd or pi:p1,p2,...")
      ->required();
  auto *proportion =
      group_command("proportion", "Proportion of solvable ordered pairs",
                    run_proportion);
  proportion->add_option("--samples", args.samples,
                         "Sample this many pairs instead of all");
  proportion->add_option("--seed", args.seed, "Sampling seed");
  group_command("check-same-class",
                "Two elements of one class generate a solvable group",
                criterion(same_class_check));
  group_command("check-kaplan-levy", "<x, x^y> is solvable",
                criterion(kaplan_levy_check));
  group_command("probe-radical-conjecture",
                "Probe class representatives of one element order", run_probe)
      ->add_option("--order", args.order, "Element order")
      ->required();
  auto *verify_pair = group_command(
      "verify-pair", "All <x, y> with |x| = a, |y| = b nonsolvable",
      run_verify_pair);
  verify_pair->add_option("a", args.a)->required();
  verify_pair->add_option("b", args.b)->required();
  group_command("find-pair", "Search prime pairs by decreasing product",
                run_find_pair);
  auto *lemma31 = group_command(
      "lemma31", "Subgroup of exponent pq in a solvable group", run_lemma31);
  lemma31->add_option("p", args.a)->required();
  lemma31->add_option("q", args.b)->required();
  auto *lemma32 = group_command(
      "lemma32", "Prime-pair hypotheses and the exhaustive oracle", run_lemma32);
  lemma32->add_option("p", args.a)->required();
  lemma32->add_option("q", args.b)->required();

  auto *sporadic =
      number_command("sporadic", "Tabulated prime pair of a sporadic group",
                     run_sporadic);
  sporadic->add_option("name", args.name)->required();
  sporadic->add_flag("--verify", args.verify,
                     "Verify against the permutation representation");
  number_command("verify-alt", "Prime-pair check on A_n", run_verify_alt)
      ->add_option("n", args.a)
      ->required();
  auto *zsig = number_command(
      "zsigmondy", "Primitive prime divisors of q^e - 1", run_zsigmondy);
  zsig->add_option("q", args.a)->required();
  zsig->add_option("e", args.b)->required();
  number_command("alt-primes", "Prime selection for A_n", run_alt_primes)
      ->add_option("n", args.a)
      ->required();
  number_command("pi-gap", "pi(2m) - pi(m) against m / (3 ln 2m)", run_pi_gap)
      ->add_option("m", args.a)
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  const CLI::App *chosen = app.get_subcommands().front();
  try {
    load_limits_from_env();
    set_default_exec(settings.exec == "serial" ? Exec::serial : Exec::parallel);
    const Result result = handlers.at(chosen)(settings, args);
    out << write_report(result.record, settings.format == "machine"
                                           ? ReportFormat::machine
                                           : ReportFormat::text);
    if (result.code == kExitEngine)
      err << "internal check failed\n";
    return result.code;
  } catch (const CapExceeded &e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::overflow_error &e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const EngineError &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitEngine;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cli_dispatch(const std::vector<std::string> &args, std::ostream &out,
                 std::ostream &err) {
  std::vector<const char *> argv{"permsolv"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  return cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace permsolv
