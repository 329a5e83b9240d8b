#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "permsolv/atlas.hpp"
#include "permsolv/cli.hpp"
#include "permsolv/group.hpp"

using namespace permsolv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const Run &r, std::string_view line) {
  return r.out.find(line) != std::string::npos;
}

// Sets an environment cap for one scope; limits() is restored afterwards
// because the CLI writes env overrides into the process-wide limits.
class EnvCap {
public:
  EnvCap(const char *name, const char *value) : name_(name), saved_(limits()) {
    ::setenv(name, value, 1);
  }
  ~EnvCap() {
    ::unsetenv(name_);
    limits() = saved_;
  }

private:
  const char *name_;
  Limits saved_;
};

} // namespace

TEST_CASE("cli: documented examples") {
  const auto s4 = run({"check-thmA3", "catalog:S4"});
  CHECK(s4.code == kExitHolds);
  const auto m11 = run({"--format", "machine", "verify-pair", "catalog:M11", "3", "11"});
  CHECK(m11.code == kExitHolds);
  CHECK(has(m11, "result=all-nonsolvable"));
  const auto z = run({"zsigmondy", "2", "6"});
  CHECK(z.code == kExitFails);
  CHECK(has(z, "exception"));
}

TEST_CASE("cli: structure commands") {
  CHECK(has(run({"--format", "machine", "order", "catalog:M12"}), "order=95040"));
  CHECK(run({"census", "catalog:A5"}).code == kExitHolds);
  CHECK(run({"classes", "catalog:PSL(2,7)"}).code == kExitHolds);
  CHECK(run({"is-solvable", "catalog:S4"}).code == kExitHolds);
  CHECK(run({"is-solvable", "catalog:A5"}).code == kExitFails);
  CHECK(run({"is-nilpotent", "catalog:Q8"}).code == kExitHolds);
  CHECK(run({"is-nilpotent", "catalog:S3"}).code == kExitFails);
  CHECK(run({"radical", "catalog:Z6xA5"}).code == kExitHolds);
  CHECK(run({"order", "catalog:nope"}).code == kExitUsage);
}

TEST_CASE("cli: criterion checkers") {
  for (const char *cmd : {"check-thompson", "check-thmA2", "check-thmA3",
                          "check-thmAprime", "check-corF"}) {
    CAPTURE(cmd);
    const auto ok = run({"--format", "machine", cmd, "catalog:S4"});
    CHECK(ok.code == kExitHolds);
    CHECK(has(ok, "verdict=holds"));
    const auto bad = run({"--format", "machine", cmd, "catalog:A5"});
    CHECK(bad.code == kExitFails);
    CHECK(has(bad, "verdict=fails"));
    CHECK(has(bad, "witness.x="));
  }
  CHECK(run({"check-corE", "catalog:Q8"}).code == kExitHolds);
  CHECK(run({"check-corE", "catalog:S3"}).code == kExitFails);
  CHECK(run({"check-thmC", "catalog:S4", "--family", "solvable"}).code == kExitHolds);
  CHECK(run({"check-thmC", "catalog:A5", "--family", "solvable"}).code == kExitFails);
  CHECK(run({"check-thmC", "catalog:S4", "--family", "pi:2,3"}).code == kExitHolds);
  CHECK(run({"check-thmC", "catalog:S4", "--family", "bogus"}).code == kExitUsage);
  CHECK(run({"check-same-class", "catalog:S4"}).code == kExitHolds);
  CHECK(run({"check-same-class", "catalog:A5"}).code == kExitFails);
  CHECK(run({"check-kaplan-levy", "catalog:A5"}).code == kExitFails);
  const auto p = run({"--format", "machine", "proportion", "catalog:A5"});
  // 11/30 is attained, not exceeded.
  CHECK(p.code == kExitFails);
  CHECK(has(p, "solvable_pairs=1320"));
  CHECK(run({"proportion", "catalog:S4"}).code == kExitHolds);
  CHECK(run({"proportion", "catalog:S4", "--samples", "500", "--seed", "3"}).code ==
        kExitHolds);
  CHECK(run({"probe-radical-conjecture", "catalog:A5", "--order", "2"}).code ==
        kExitFails);
  CHECK(run({"probe-radical-conjecture", "catalog:S4", "--order", "2"}).code ==
        kExitHolds);
}

TEST_CASE("cli: witness commands") {
  CHECK(run({"verify-pair", "catalog:A5", "3", "5"}).code == kExitHolds);
  CHECK(run({"verify-pair", "catalog:A5", "2", "3"}).code == kExitFails);
  CHECK(run({"verify-pair", "catalog:A5", "3", "7"}).code == kExitUsage);
  CHECK(run({"find-pair", "catalog:A5"}).code == kExitHolds);
  CHECK(run({"find-pair", "catalog:S4"}).code == kExitFails);
  CHECK(run({"lemma31", "catalog:S3", "2", "3"}).code == kExitHolds);
  CHECK(run({"lemma31", "catalog:A5", "2", "3"}).code == kExitUsage);
  CHECK(run({"lemma32", "catalog:A5", "3", "5"}).code == kExitHolds);
  CHECK(run({"lemma32", "catalog:A5", "2", "3"}).code == kExitFails);
  CHECK(run({"sporadic", "M11"}).code == kExitHolds);
  CHECK(run({"sporadic", "M11", "--verify"}).code == kExitHolds);
  CHECK(run({"sporadic", "J1"}).code == kExitHolds);
  CHECK(run({"sporadic", "J1", "--verify"}).code == kExitCap);
  CHECK(run({"sporadic", "M13"}).code == kExitUsage);
  CHECK(run({"verify-alt", "5"}).code == kExitHolds);
  CHECK(run({"verify-alt", "4"}).code == kExitUsage);
  CHECK(run({"verify-alt", "10"}).code == kExitCap);
}

TEST_CASE("cli: number theory commands") {
  CHECK(run({"zsigmondy", "2", "4"}).code == kExitHolds);
  CHECK(run({"zsigmondy", "7", "2"}).code == kExitFails);
  CHECK(run({"zsigmondy", "1", "2"}).code == kExitUsage);
  CHECK(run({"zsigmondy", "10", "40"}).code == kExitCap);
  CHECK(has(run({"--format", "machine", "alt-primes", "16"}), "p=11"));
  CHECK(run({"alt-primes", "4"}).code == kExitUsage);
  CHECK(run({"pi-gap", "9"}).code == kExitHolds);
  CHECK(run({"pi-gap", "1"}).code == kExitUsage);
  CHECK(run({"pi-gap", "10000000"}).code == kExitCap);
}

TEST_CASE("cli: usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"order"}).code == kExitUsage);
  CHECK(run({"verify-pair", "catalog:A5", "3"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "order", "catalog:A5"}).code == kExitUsage);
  CHECK(run({"--exec", "gpu", "order", "catalog:A5"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitHolds);
}

TEST_CASE("cli: caps from the environment") {
  {
    EnvCap cap("ENUM_CAP", "50");
    CHECK(run({"census", "catalog:A5"}).code == kExitCap);
    CHECK(run({"check-thmA2", "catalog:A5"}).code == kExitCap);
    CHECK(run({"order", "catalog:A5"}).code == kExitHolds);
  }
  {
    EnvCap cap("PAIR_CAP", "100");
    CHECK(run({"proportion", "catalog:A5"}).code == kExitCap);
  }
  {
    EnvCap cap("SIEVE_CAP", "100");
    CHECK(run({"pi-gap", "51"}).code == kExitCap);
    CHECK(run({"pi-gap", "50"}).code == kExitHolds);
  }
  CHECK(run({"census", "catalog:A5"}).code == kExitHolds);
}

TEST_CASE("cli: machine output is reproducible") {
  const std::vector<std::string> args{"--format", "machine", "check-thmA2",
                                      "catalog:PSL(2,7)"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  const auto serial = run({"--format", "machine", "--exec", "serial",
                           "check-thmA2", "catalog:PSL(2,7)"});
  CHECK(serial.out == a.out);
  CHECK(a.out.rfind("criterion=", 0) == 0);
  CHECK(a.out.find("wall_time_ms") == std::string::npos);
  CHECK(has(run({"--timing", "--format", "machine", "check-thmA2", "catalog:S4"}),
            "wall_time_ms="));
}

TEST_CASE("cli: groups from files") {
  const auto path = std::filesystem::temp_directory_path() / "permsolv_cli_a5.grp";
  {
    std::ofstream out(path);
    out << format_group_file(catalog_lookup("A5"));
  }
  CHECK(has(run({"--format", "machine", "order", path.string()}), "order=60"));
  CHECK(run({"check-thmA3", path.string()}).code == kExitFails);
  {
    std::ofstream out(path);
    out << "name broken\ndegree 3\ngen (1,5)\n";
  }
  CHECK(run({"order", path.string()}).code == kExitUsage);
  std::filesystem::remove(path);
  CHECK(run({"order", path.string()}).code == kExitUsage);
}
