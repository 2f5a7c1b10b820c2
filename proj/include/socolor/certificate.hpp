#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "socolor/coloring.hpp"
#include "socolor/embedding.hpp"
#include "socolor/graph.hpp"
#include "socolor/solver.hpp"

namespace soc {

enum class ClaimKind { exact, upper_bound };

struct CheckRecord {
  std::string name;
  bool ok = false;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

// Completed exhaustive search showing no strong odd coloring with k colors.
struct RefutationRecord {
  std::size_t k = 0;
  std::uint64_t nodes = 0;
};

struct Certificate {
  std::string family;
  Graph graph;
  Coloring coloring;
  std::size_t claimed_value = 0;
  ClaimKind claim_kind = ClaimKind::upper_bound;
  RotationSystem rotation;
  std::size_t faces = 0;
  bool euler_ok = false;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;
  std::optional<RefutationRecord> refutation;

  bool all_ok() const;
};

struct CertifyOptions {
  // When set, decide_k(graph, claimed - 1) is attempted with these options;
  // a completed refutation upgrades the claim to exact.
  std::optional<SolveOptions> refute;
  // Elapsed seconds of the refutation attempt, if any (not serialized).
  double* refute_seconds = nullptr;
};

/// Certificate for I_y(G_8, G_n), n > 9 and n = 1 or 5 (mod 6), value 14.
/// Throws InvalidParameter for any other n.
Certificate counterexample(std::size_t n, const CertifyOptions& options = {});

/// Certificate for I_y(G_m, G_n) with value union_formula(m, n), m, n >= 3.
Certificate union_certificate(std::size_t m, std::size_t n,
                              const CertifyOptions& options = {});

nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& doc);

/// Re-runs every check using only the serialized document: parses the
/// graph, coloring and rotation, verifies them with the checkers, rebuilds
/// the family and compares, and checks recorded facts against recomputed
/// ones. Malformed documents yield a failing "parse" record. For exact
/// claims the recorded refutation is re-run when `rerun_refutation` is set.
std::vector<CheckRecord> reverify(const nlohmann::json& doc,
                                  const std::optional<SolveOptions>& rerun_refutation = {});

struct BundlePaths {
  std::filesystem::path certificate;
  std::filesystem::path graph;
  std::filesystem::path labels;
  std::filesystem::path coloring;
  std::filesystem::path rotation;
};

BundlePaths bundle_paths(const std::filesystem::path& dir);

/// Writes certificate.json plus standalone graph/labels/coloring/rotation
/// files into `dir` (created if needed). Output is deterministic.
BundlePaths write_bundle(const Certificate& cert, const std::filesystem::path& dir);

}  // namespace soc
