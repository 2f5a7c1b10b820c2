#include "socolor/certificate.hpp"

#include <algorithm>

#include "socolor/error.hpp"
#include "socolor/families.hpp"
#include "socolor/io.hpp"
#include "socolor/verify.hpp"

namespace soc {

namespace {

using nlohmann::json;

const char* to_string(ClaimKind k) { return k == ClaimKind::exact ? "exact" : "upper-bound"; }

ClaimKind claim_kind_from(const std::string& s) {
  if (s == "exact") return ClaimKind::exact;
  if (s == "upper-bound") return ClaimKind::upper_bound;
  throw InvalidParameter("unknown claim_kind '" + s + "'");
}

// Values of I_y(G_7, G_n) and I_y(G_8, G_n) for n in {14, 15} are easy to
// mix up: W_15 needs only 4 colors while W_14 needs 7.
void add_wheel_15_note(Certificate& cert, std::size_t m, std::size_t n) {
  if (m != 15 && n != 15) return;
  const auto other = m == 15 ? n : m;
  cert.notes.push_back("chi_so(W_15) = 4, so this union evaluates to " +
                       std::to_string(union_formula(m, n)) + "; the graph with " +
                       std::to_string(union_formula(other, 14)) + " uses G_14 (chi_so(W_14) = 7)");
}

}  // namespace

bool Certificate::all_ok() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.ok; });
}

Certificate union_certificate(std::size_t m, std::size_t n, const CertifyOptions& options) {
  if (m < 3 || n < 3) throw InvalidParameter("union certificate needs m, n >= 3");
  const FamilySpec spec = family::UnionG{m, n};

  Certificate cert;
  cert.family = describe(spec);
  cert.graph = build(spec);
  cert.coloring = union_coloring(m, n);
  cert.claimed_value = union_formula(m, n);
  cert.rotation = embed_family(spec);
  const auto embedding = verify_embedding(cert.graph, cert.rotation);
  cert.faces = embedding.faces;
  cert.euler_ok = embedding.euler_ok;

  cert.checks = {
      {"is_proper", is_proper(cert.graph, cert.coloring)},
      {"is_strong_odd", is_strong_odd(cert.graph, cert.coloring)},
      {"palette_count", cert.coloring.num_colors() == cert.claimed_value},
      {"euler", cert.euler_ok},
      {"formula", cert.claimed_value == union_formula(m, n)},
  };

  if (options.refute && cert.claimed_value > 1) {
    const auto k = cert.claimed_value - 1;
    const auto r = decide_k(cert.graph, k, *options.refute);
    if (options.refute_seconds) *options.refute_seconds = r.stats.seconds;
    if (r.decision == Decision::no) {
      cert.claim_kind = ClaimKind::exact;
      cert.refutation = RefutationRecord{k, r.stats.nodes};
      cert.checks.push_back({"refutation", true});
    } else if (r.decision == Decision::yes) {
      // Would contradict the closed form; never emit such a certificate.
      cert.checks.push_back({"refutation", false});
      cert.notes.push_back("a strong odd coloring with " + std::to_string(k) + " colors exists");
    } else {
      cert.notes.push_back("refutation with " + std::to_string(k) +
                           " colors did not complete within the budget");
    }
  }

  if (cert.claim_kind == ClaimKind::upper_bound) {
    cert.notes.push_back("upper bound: the coloring is verified; the matching lower bound is " +
                         union_case(m, n) + " and is not machine-refuted here");
  } else {
    cert.notes.push_back("exact: coloring verified and no strong odd coloring with " +
                         std::to_string(cert.claimed_value - 1) + " colors exists");
  }
  add_wheel_15_note(cert, m, n);
  return cert;
}

Certificate counterexample(std::size_t n, const CertifyOptions& options) {
  if (n <= 9 || (n % 6 != 1 && n % 6 != 5)) {
    throw InvalidParameter("counterexample family needs n > 9 and n = 1 or 5 (mod 6), got " +
                           std::to_string(n));
  }
  return union_certificate(8, n, options);
}

json to_json(const Certificate& cert) {
  json doc;
  doc["family"] = cert.family;
  doc["graph_dimacs"] = to_dimacs(cert.graph, cert.family);
  json labels = json::array();
  for (const auto& [v, role] : cert.graph.labels()) labels.push_back({v + 1, role});
  doc["labels"] = labels;
  doc["coloring"] = std::vector<Color>(cert.coloring.assignment().begin(),
                                       cert.coloring.assignment().end());
  doc["claimed_value"] = cert.claimed_value;
  doc["claim_kind"] = to_string(cert.claim_kind);
  json rotation = json::array();
  for (const auto& around : cert.rotation.data()) {
    json row = json::array();
    for (Vertex w : around) row.push_back(w + 1);
    rotation.push_back(row);
  }
  doc["rotation"] = rotation;
  doc["faces"] = cert.faces;
  doc["euler_ok"] = cert.euler_ok;
  json checks = json::array();
  for (const auto& c : cert.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
  doc["checks"] = checks;
  doc["notes"] = cert.notes;
  if (cert.refutation) {
    doc["refutation"] = {{"k", cert.refutation->k}, {"nodes", cert.refutation->nodes}};
  }
  return doc;
}

Certificate certificate_from_json(const json& doc) {
  Certificate cert;
  cert.family = doc.at("family").get<std::string>();
  cert.graph = from_dimacs(doc.at("graph_dimacs").get<std::string>());
  for (const auto& entry : doc.at("labels")) {
    const auto v = entry.at(0).get<std::size_t>();
    if (v < 1) throw InvalidParameter("label vertex must be >= 1");
    cert.graph.set_label(static_cast<Vertex>(v - 1), entry.at(1).get<std::string>());
  }
  cert.coloring = Coloring(doc.at("coloring").get<std::vector<Color>>());
  cert.claimed_value = doc.at("claimed_value").get<std::size_t>();
  cert.claim_kind = claim_kind_from(doc.at("claim_kind").get<std::string>());
  std::vector<std::vector<Vertex>> rotation;
  for (const auto& row : doc.at("rotation")) {
    std::vector<Vertex> around;
    for (const auto& w : row) {
      const auto x = w.get<std::size_t>();
      if (x < 1) throw InvalidParameter("rotation entries are 1-indexed");
      around.push_back(static_cast<Vertex>(x - 1));
    }
    rotation.push_back(std::move(around));
  }
  cert.rotation = RotationSystem(std::move(rotation));
  cert.faces = doc.at("faces").get<std::size_t>();
  cert.euler_ok = doc.at("euler_ok").get<bool>();
  for (const auto& c : doc.at("checks")) {
    cert.checks.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>()});
  }
  cert.notes = doc.at("notes").get<std::vector<std::string>>();
  if (doc.contains("refutation")) {
    const auto& r = doc.at("refutation");
    cert.refutation = RefutationRecord{r.at("k").get<std::size_t>(), r.at("nodes").get<std::uint64_t>()};
  }
  return cert;
}

std::vector<CheckRecord> reverify(const json& doc, const std::optional<SolveOptions>& rerun_refutation) {
  Certificate cert;
  try {
    cert = certificate_from_json(doc);
  } catch (const std::exception&) {
    return {{"parse", false}};
  }

  std::vector<CheckRecord> out{{"parse", true}};
  const bool covers = cert.coloring.size() == cert.graph.num_vertices();
  out.push_back({"coloring_total", covers});
  out.push_back({"is_proper", covers && is_proper(cert.graph, cert.coloring)});
  out.push_back({"is_strong_odd", covers && is_strong_odd(cert.graph, cert.coloring)});
  out.push_back({"palette_count", cert.coloring.num_colors() == cert.claimed_value});

  try {
    const auto e = verify_embedding(cert.graph, cert.rotation);
    out.push_back({"euler", e.euler_ok && cert.euler_ok && e.faces == cert.faces});
  } catch (const InvalidRotation&) {
    out.push_back({"euler", false});
  }

  // The serialized graph must be the family it claims to be.
  std::optional<FamilySpec> spec;
  try {
    spec = parse_family(cert.family);
    out.push_back({"family_graph", !std::holds_alternative<family::FromFile>(*spec) &&
                                       build(*spec) == cert.graph});
  } catch (const Error&) {
    out.push_back({"family_graph", false});
  }
  if (spec) {
    if (const auto* u = std::get_if<family::UnionG>(&*spec)) {
      out.push_back({"formula", cert.claimed_value == union_formula(u->m, u->n)});
    }
  }

  out.push_back({"recorded_checks",
                 !cert.checks.empty() && std::all_of(cert.checks.begin(), cert.checks.end(),
                                                     [](const CheckRecord& r) { return r.ok; })});

  if (cert.claim_kind == ClaimKind::exact) {
    bool ok = cert.refutation && cert.claimed_value >= 2 &&
              cert.refutation->k + 1 == cert.claimed_value;
    if (ok && rerun_refutation) {
      ok = decide_k(cert.graph, cert.refutation->k, *rerun_refutation).decision == Decision::no;
    }
    out.push_back({"refutation", ok});
  }
  return out;
}

BundlePaths bundle_paths(const std::filesystem::path& dir) {
  return {dir / "certificate.json", dir / "graph.col", dir / "graph.lbl", dir / "coloring.txt",
          dir / "rotation.txt"};
}

BundlePaths write_bundle(const Certificate& cert, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto paths = bundle_paths(dir);
  write_file(paths.certificate, to_json(cert).dump(2) + "\n");
  write_file(paths.graph, to_dimacs(cert.graph, cert.family));
  write_file(paths.labels, to_labels(cert.graph));
  write_file(paths.coloring, to_coloring_text(cert.coloring));
  write_file(paths.rotation, to_rotation_text(cert.rotation));
  return paths;
}

}  // namespace soc
