#include <doctest.h>

#include <filesystem>

#include "socolor/certificate.hpp"
#include "socolor/error.hpp"
#include "socolor/io.hpp"

using namespace soc;

namespace {

bool all_pass(const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return !checks.empty();
}

bool check_named(const std::vector<CheckRecord>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return c.ok;
  }
  FAIL("no check named " << name);
  return false;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("socolor_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("counterexample certificate for n = 11") {
  const auto cert = counterexample(11);
  CHECK(cert.family == "union-g(8,11)");
  CHECK(cert.graph.num_vertices() == 22);
  CHECK(cert.claimed_value == 14);
  CHECK(cert.claim_kind == ClaimKind::upper_bound);
  CHECK(cert.euler_ok);
  CHECK(cert.faces == 2 - 22 + cert.graph.num_edges());
  CHECK(cert.all_ok());
  CHECK(all_pass(reverify(to_json(cert))));
}

TEST_CASE("counterexample rejects parameters outside the family") {
  CHECK_THROWS_AS(counterexample(12), InvalidParameter);
  CHECK_THROWS_AS(counterexample(7), InvalidParameter);
  CHECK_THROWS_AS(counterexample(9), InvalidParameter);
  CHECK_NOTHROW(counterexample(17));
}

TEST_CASE("pair certificates") {
  CHECK(union_certificate(8, 8).claimed_value == 17);
  CHECK(union_certificate(7, 8).claimed_value == 16);
  CHECK(union_certificate(6, 8).claimed_value == 15);
  CHECK(union_certificate(7, 7).claimed_value == 15);
  CHECK(union_certificate(7, 8).all_ok());
  const auto c715 = union_certificate(7, 15);
  CHECK(c715.claimed_value == 11);
  bool noted = false;
  for (const auto& note : c715.notes) noted = noted || note.find("G_14") != std::string::npos;
  CHECK(noted);
  CHECK_THROWS_AS(union_certificate(2, 8), InvalidParameter);
}

TEST_CASE("json round trip and tamper detection") {
  const auto cert = union_certificate(8, 8);
  const auto doc = to_json(cert);
  const auto back = certificate_from_json(doc);
  CHECK(back.graph == cert.graph);
  CHECK(back.coloring == cert.coloring);
  CHECK(back.rotation == cert.rotation);
  CHECK(back.checks == cert.checks);
  CHECK(to_json(back) == doc);

  SUBCASE("recolored vertex") {
    auto bad = doc;
    bad["coloring"][0] = bad["coloring"][1];
    const auto checks = reverify(bad);
    CHECK_FALSE(check_named(checks, "is_proper"));
    CHECK_FALSE(all_pass(checks));
  }
  SUBCASE("inflated claim") {
    auto bad = doc;
    bad["claimed_value"] = 16;
    const auto checks = reverify(bad);
    CHECK_FALSE(check_named(checks, "palette_count"));
    CHECK_FALSE(check_named(checks, "formula"));
  }
  SUBCASE("broken rotation") {
    auto bad = doc;
    std::swap(bad["rotation"][0][0], bad["rotation"][0][1]);
    CHECK_FALSE(check_named(reverify(bad), "euler"));
  }
  SUBCASE("wrong family") {
    auto bad = doc;
    bad["family"] = "union-g(8,7)";
    CHECK_FALSE(check_named(reverify(bad), "family_graph"));
  }
  SUBCASE("exact claim without refutation") {
    auto bad = doc;
    bad["claim_kind"] = "exact";
    CHECK_FALSE(check_named(reverify(bad), "refutation"));
  }
  SUBCASE("garbage") {
    auto bad = doc;
    bad.erase("graph_dimacs");
    CHECK_FALSE(check_named(reverify(bad), "parse"));
  }
}

TEST_CASE("refutation upgrades small claims to exact") {
  CertifyOptions opts;
  opts.refute = SolveOptions{};
  const auto cert = union_certificate(3, 3, opts);
  CHECK(cert.claim_kind == ClaimKind::exact);
  REQUIRE(cert.refutation);
  CHECK(cert.refutation->k == 6);
  CHECK(cert.all_ok());
  CHECK(all_pass(reverify(to_json(cert), SolveOptions{})));

  CertifyOptions tiny;
  tiny.refute = SolveOptions{Budget::nodes(1000)};
  const auto big = counterexample(11, tiny);
  CHECK(big.claim_kind == ClaimKind::upper_bound);
  CHECK_FALSE(big.refutation);
  CHECK(big.all_ok());
}

TEST_CASE("bundles re-verify from disk and are deterministic") {
  const auto dir = scratch_dir("bundle");
  const auto paths = write_bundle(counterexample(17), dir);
  const auto first = read_file(paths.certificate);

  const auto doc = nlohmann::json::parse(first);
  CHECK(all_pass(reverify(doc)));

  const Graph g = from_dimacs(read_file(paths.graph));
  CHECK(g.num_vertices() == 28);
  CHECK(from_coloring_text(read_file(paths.coloring), g.num_vertices()).num_colors() == 14);

  write_bundle(counterexample(17), dir);
  CHECK(read_file(paths.certificate) == first);
  std::filesystem::remove_all(dir);
}
