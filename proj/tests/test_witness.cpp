#include <doctest.h>

#include "oracles.hpp"
#include "permsolv/atlas.hpp"
#include "permsolv/classes.hpp"
#include "permsolv/numth.hpp"
#include "permsolv/witness.hpp"
#include "sweep.hpp"

using namespace permsolv;

namespace {

WitnessOptions opts(Exec exec, bool reduce) {
  WitnessOptions o;
  o.exec = exec;
  o.reduce = reduce;
  return o;
}

} // namespace

TEST_CASE("verify_prime_pair") {
  const auto a5 = catalog_lookup("A5");
  CHECK(verify_prime_pair(a5, 3, 5).all_nonsolvable());

  const auto c = verify_prime_pair(a5, 2, 3);
  REQUIRE(c.result == PairResult::counterexample);
  CHECK(element_order(*c.x) == 2);
  CHECK(element_order(*c.y) == 3);
  CHECK(generates_solvable(*c.x, *c.y));
  CHECK((c.subgroup_order == 6 || c.subgroup_order == 12));

  CHECK(verify_prime_pair(catalog_lookup("M11"), 3, 11).all_nonsolvable());

  CHECK_THROWS_AS(verify_prime_pair(a5, 3, 7), std::invalid_argument);
  CHECK_THROWS_AS(verify_prime_pair(a5, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_prime_pair(a5, 4, 5), std::invalid_argument);
}

TEST_CASE("verify_prime_pair against the brute-force oracle") {
  for (const char *key : {"A5", "S4", "PSL(2,7)", "D10"}) {
    const auto g = catalog_lookup(key);
    const auto primes = factorize(g.order()).primes();
    for (auto a : primes)
      for (auto b : primes) {
        if (a == b)
          continue;
        bool expected = true;
        for (const auto &x : elements_of_order(g, a))
          for (const auto &y : elements_of_order(g, b))
            expected = expected && !oracle::generates_solvable({x, y}, g.degree());
        CAPTURE(key);
        CAPTURE(a);
        CAPTURE(b);
        const auto v = verify_prime_pair(g, a, b);
        CHECK(v.all_nonsolvable() == expected);
        // The outcome does not depend on the order of the primes.
        CHECK(verify_prime_pair(g, b, a).all_nonsolvable() == expected);
      }
  }
}

TEST_CASE("representative reduction matches the full x loop") {
  for (const char *key : {"A5", "S5", "A6", "PSL(2,7)", "Z6xA5", "A7"}) {
    const auto g = catalog_lookup(key);
    if (g.order() > 2520)
      continue;
    const auto primes = factorize(g.order()).primes();
    for (auto a : primes)
      for (auto b : primes)
        if (a != b) {
          CAPTURE(key);
          CAPTURE(a);
          CAPTURE(b);
          const auto reduced = verify_prime_pair(g, a, b, opts(Exec::parallel, true));
          const auto full = verify_prime_pair(g, a, b, opts(Exec::parallel, false));
          CHECK(reduced.result == full.result);
          const auto serial = verify_prime_pair(g, a, b, opts(Exec::serial, true));
          CHECK(serial.result == reduced.result);
          CHECK(serial.x == reduced.x);
          CHECK(serial.y == reduced.y);
          CHECK(serial.pairs_checked == reduced.pairs_checked);
        }
  }
}

TEST_CASE("find_witness_pair") {
  const auto a5 = find_witness_pair(catalog_lookup("A5"));
  REQUIRE(a5.pair);
  CHECK(*a5.pair == std::pair<std::uint64_t, std::uint64_t>{3, 5});

  const auto s4 = find_witness_pair(catalog_lookup("S4"));
  CHECK_FALSE(s4.pair);
  CHECK(s4.tried.empty());

  // (3, 7) comes first by product but the Frobenius subgroup 7:3 is a
  // solvable <x, y>; the scan moves on to (2, 7).
  const auto psl = find_witness_pair(catalog_lookup("PSL(2,7)"));
  REQUIRE(psl.pair);
  REQUIRE(psl.tried.size() == 2);
  CHECK(psl.tried[0].a == 3);
  CHECK(psl.tried[0].b == 7);
  CHECK(psl.tried[0].result == PairResult::counterexample);
  CHECK(psl.tried[0].subgroup_order == 21);
  CHECK(*psl.pair == std::pair<std::uint64_t, std::uint64_t>{2, 7});
}

TEST_CASE("witness pairs on the nonsolvable catalog groups") {
  for (const char *key : {"A5", "A6", "A7", "PSL(2,7)", "M11", "S5", "S6"}) {
    CAPTURE(key);
    const auto s = find_witness_pair(catalog_lookup(key));
    REQUIRE(s.pair);
    CHECK(s.verdict->all_nonsolvable());
  }
  // A p-element in one factor and a q-element in the other commute, so no
  // pair of primes works for these products.
  for (const char *key : {"Z6xA5", "A5xA5"}) {
    CAPTURE(key);
    const auto s = find_witness_pair(catalog_lookup(key));
    CHECK_FALSE(s.pair);
    CHECK(s.tried.size() == 3);
  }
}

TEST_CASE("lemma32_hypotheses") {
  const auto a5 = catalog_lookup("A5");
  const auto r = lemma32_hypotheses(a5, 3, 5);
  CHECK(r.sylow_q_cyclic);
  CHECK(r.p_not_dividing_q_minus_1);
  CHECK(r.q_not_dividing_p_powers_minus_1);
  CHECK(r.no_element_of_order_pq);
  CHECK(r.hypotheses_hold);
  CHECK(r.oracle_no_solvable_pair);
  CHECK(r.implication_holds);

  // 2 divides 3 - 1 and 3 divides 2^2 - 1.
  const auto f = lemma32_hypotheses(a5, 2, 3);
  CHECK(f.s == 2);
  CHECK(f.sylow_q_cyclic);
  CHECK_FALSE(f.p_not_dividing_q_minus_1);
  CHECK_FALSE(f.q_not_dividing_p_powers_minus_1);
  CHECK(f.no_element_of_order_pq);
  CHECK_FALSE(f.hypotheses_hold);
  CHECK(f.implication_holds);

  const auto z = lemma32_hypotheses(catalog_lookup("Z15"), 3, 5);
  CHECK_FALSE(z.no_element_of_order_pq);
  CHECK_FALSE(z.hypotheses_hold);
  CHECK_FALSE(z.oracle_no_solvable_pair);
  CHECK(z.oracle_counterexample);

  CHECK_THROWS_AS(lemma32_hypotheses(a5, 3, 7), std::invalid_argument);
  CHECK_THROWS_AS(lemma32_hypotheses(a5, 5, 5), std::invalid_argument);
}

TEST_CASE("lemma31_witness") {
  const auto s3 = lemma31_witness(catalog_lookup("S3"), 2, 3);
  REQUIRE(s3);
  CHECK(s3->order == 6);

  const auto s4 = lemma31_witness(catalog_lookup("S4"), 2, 3);
  REQUIRE(s4);
  CHECK((s4->order == 6 || s4->order == 12));
  for (const auto &[o, n] : s4->census.counts)
    CHECK((o == 1 || o == 2 || o == 3 || o == 6));

  const auto z6 = lemma31_witness(catalog_lookup("Z6"), 2, 3);
  REQUIRE(z6);
  CHECK(z6->order == 6);
  CHECK(z6->census.count(6) == 2);

  CHECK_THROWS_AS(lemma31_witness(catalog_lookup("A5"), 2, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(lemma31_witness(catalog_lookup("S4"), 2, 5),
                  std::invalid_argument);
}

TEST_CASE("sporadic table") {
  CHECK(sporadic_entries().size() == 27);
  const auto &m11 = sporadic_table("M11");
  CHECK(m11.p == 3);
  CHECK(m11.p_sylow_order == 9);
  CHECK(m11.q == 11);
  CHECK(m11.q_sylow_order == 11);
  const auto &j1 = sporadic_table("J1");
  CHECK(j1.p == 11);
  CHECK(j1.p_sylow_order == 11);
  CHECK(j1.q == 19);
  CHECK(j1.q_sylow_order == 19);
  const auto &tits = sporadic_table("2F4(2)'");
  CHECK(tits.p == 5);
  CHECK(tits.p_sylow_order == 25);
  CHECK(tits.q == 13);
  CHECK_THROWS_AS(sporadic_table("M13"), std::invalid_argument);
}

TEST_CASE("sporadic table arithmetic") {
  // The stored orders reproduce the expected small ones.
  auto order_of = [](std::string_view name) {
    std::uint64_t n = 1;
    for (const auto &[p, e] : sporadic_table(name).order_factors)
      n *= checked_pow(p, e);
    return n;
  };
  CHECK(order_of("M11") == 7920);
  CHECK(order_of("M12") == 95040);
  CHECK(order_of("J1") == 175560);
  CHECK(order_of("M22") == 443520);
  CHECK(order_of("J2") == 604800);
  CHECK(order_of("HS") == 44352000);

  for (const auto &e : sporadic_entries()) {
    CAPTURE(e.name);
    CHECK(is_prime(e.p));
    CHECK(is_prime(e.q));
    for (const auto &[p, exp] : e.order_factors)
      CHECK(is_prime(p));
    const auto a = sporadic_arithmetic(e);
    // 23 does not divide |M22|; every other row matches the group order.
    CHECK(a.sylow_orders_match == (e.name != "M22"));
  }
}

TEST_CASE("sporadic rows with a permutation representation") {
  for (const char *name : {"M11", "M12"}) {
    const auto &e = sporadic_table(name);
    const auto g = catalog_lookup(name);
    CHECK(g.order() % e.p_sylow_order == 0);
    CHECK((g.order() / e.p_sylow_order) % e.p != 0);
    const auto a = sporadic_arithmetic(e);
    CHECK(a.sylow_orders_match);
    CHECK(a.p_not_dividing_q_minus_1);
    CHECK(a.q_not_dividing_p_powers_minus_1);
    CHECK(a.q_sylow_cyclic_by_order);
    const auto l = lemma32_hypotheses(g, e.p, e.q);
    CHECK(l.hypotheses_hold);
    CHECK(l.implication_holds);
  }
}

TEST_CASE("verify_alternating") {
  const auto five = verify_alternating(5);
  CHECK(five.p == 3);
  CHECK(five.q == 5);
  CHECK(five.passed());
  CHECK(five.shapes.size() == 1);
  CHECK(five.shapes.begin()->first == std::pair<std::uint64_t, std::uint64_t>{5, 60});

  const auto six = verify_alternating(6);
  CHECK(six.passed());
  for (const auto &[shape, count] : six.shapes)
    CHECK((shape == std::pair<std::uint64_t, std::uint64_t>{6, 360} ||
           shape.second == 60));

  const auto seven = verify_alternating(7);
  CHECK(seven.p == 5);
  CHECK(seven.q == 7);
  CHECK(seven.passed());
  CHECK(seven.shapes ==
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>{
            {{7, 2520}, seven.verdict.pairs_checked}});

  CHECK_THROWS_AS(verify_alternating(4), std::invalid_argument);
  CHECK_THROWS_AS(verify_alternating(10), CapExceeded);
}

TEST_CASE("verify_alternating is schedule independent") {
  const auto s = verify_alternating(6, opts(Exec::serial, true));
  const auto p = verify_alternating(6, opts(Exec::parallel, true));
  CHECK(s.shapes == p.shapes);
  CHECK(s.verdict.pairs_checked == p.verdict.pairs_checked);
  const auto full = verify_alternating(6, opts(Exec::parallel, false));
  CHECK(full.passed());
}
