#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "permsolv/atlas.hpp"
#include "permsolv/structure.hpp"
#include "sweep.hpp"

using namespace permsolv;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_group_file(text);
  } catch (const GroupFileError &e) {
    return e.line();
  }
  return 0;
}

} // namespace

TEST_CASE("catalog orders") {
  CHECK(catalog_lookup("A5").order() == 60);
  CHECK(catalog_lookup("PSL(2,7)").order() == 168);
  CHECK(catalog_lookup("M11").order() == 7920);
  CHECK(catalog_lookup("M12").order() == 95040);
  CHECK(catalog_lookup("Q8").order() == 8);
  CHECK(catalog_lookup("S6").order() == 720);
  CHECK(catalog_lookup("A8").order() == 20160);
  CHECK(catalog_lookup("D2").order() == 2);
  CHECK(catalog_lookup("D4").order() == 4);
  CHECK(catalog_lookup("D14").order() == 14);
  CHECK(catalog_lookup("Z1").order() == 1);
  CHECK(catalog_lookup("A2").order() == 1);

  const auto p = catalog_lookup("Z6xA5");
  CHECK(p.order() == 360);
  CHECK(p.degree() == 11);
  const auto q = catalog_lookup("A5xA5");
  CHECK(q.order() == 3600);
  CHECK(q.degree() == 10);
  CHECK(catalog_lookup("Z2xZ3xZ5").order() == 30);
  CHECK(catalog_lookup("Z1xA5").order() == 60);
}

TEST_CASE("catalog flags agree with the engine") {
  for (const auto &key : sweep_keys()) {
    CAPTURE(key);
    const auto entry = catalog_entry(key);
    const auto g = catalog_lookup(key);
    CHECK(g.order() == entry.expected_order);
    CHECK(is_solvable(g).solvable == entry.expected_solvable);
    CHECK(is_nilpotent(g) == entry.expected_nilpotent);
  }
  for (const auto &key : fixed_catalog_keys())
    CHECK_NOTHROW(catalog_lookup(key));
}

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(catalog_lookup("B7"), CatalogError);
  CHECK_THROWS_AS(catalog_lookup("Z0"), CatalogError);
  CHECK_THROWS_AS(catalog_lookup("D7"), CatalogError);
  CHECK_THROWS_AS(catalog_lookup("A5x"), CatalogError);
  CHECK_THROWS_AS(catalog_lookup(""), CatalogError);

  // A mismatch between the stored and computed order is an engine fault.
  auto entry = catalog_entry("A5");
  entry.expected_order = 61;
  CHECK_THROWS_AS(validate_catalog_group(build_catalog_entry(entry), entry),
                  EngineError);
}

TEST_CASE("direct products respect the degree cap") {
  const auto big = catalog_lookup("Z600");
  CHECK(direct_product(big, catalog_lookup("Z400")).degree() == 1000);
  CHECK_THROWS_AS(direct_product(big, big), std::invalid_argument);
  const auto g = direct_product(catalog_lookup("S3"), catalog_lookup("Z2"));
  CHECK(g.order() == 12);
  CHECK(g.name() == "S3xZ2");
}

TEST_CASE("group files round-trip") {
  for (const char *key : {"A5", "M11", "Q8", "Z1", "Z6xA4", "PSL(2,7)"}) {
    CAPTURE(key);
    const auto g = catalog_lookup(key);
    const auto text = format_group_file(g);
    const auto h = parse_group_file(text);
    CHECK(format_group_file(h) == text);
    CHECK(h.order() == g.order());
    CHECK(h.degree() == g.degree());
  }
  CHECK(format_group_file(catalog_lookup("S3")) ==
        "name S3\ndegree 3\ngen (1,2,3)\ngen (1,2)\n");
}

TEST_CASE("group file parsing") {
  const auto g = parse_group_file("# the alternating group\n"
                                  "name A5   # five points\n"
                                  "\n"
                                  "degree 5\n"
                                  "gen (1,2,3,4,5)\n"
                                  "gen (3,4,5)\n");
  CHECK(g.name() == "A5");
  CHECK(g.order() == 60);

  CHECK(error_line("name X\ndegree 3\ngen (1,4)\n") == 3);
  CHECK(error_line("name X\ndegree 3\ngen (1,2)\nsize 6\n") == 4);
  CHECK(error_line("name X\nname Y\ndegree 3\ngen (1,2)\n") == 2);
  CHECK(error_line("name X\ndegree three\ngen (1,2)\n") == 2);
  CHECK_THROWS_AS(parse_group_file("name X\ndegree 3\n"), GroupFileError);
  CHECK_THROWS_AS(parse_group_file("degree 3\ngen (1,2)\n"), GroupFileError);
  CHECK_THROWS_AS(parse_group_file("name X\ngen (1,2)\n"), GroupFileError);
}

TEST_CASE("group arguments resolve to files or catalog keys") {
  const auto path = std::filesystem::temp_directory_path() / "permsolv_s4.grp";
  {
    std::ofstream out(path);
    out << format_group_file(catalog_lookup("S4"));
  }
  CHECK(resolve_group_argument(path.string()).order() == 24);
  CHECK(read_group_file(path).order() == 24);
  CHECK(resolve_group_argument("catalog:M11").order() == 7920);
  std::filesystem::remove(path);
  CHECK_THROWS(resolve_group_argument(path.string()));
  CHECK_THROWS_AS(resolve_group_argument("catalog:nope"), CatalogError);
}
