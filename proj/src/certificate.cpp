#include "arcmatch/certificate.hpp"

#include <set>

#include "arcmatch/patterns.hpp"
#include "arcmatch/pins.hpp"
#include "arcmatch/text.hpp"
#include "json.hpp"

namespace arcmatch {

using nlohmann::json;

namespace {

json edge_array(std::span<const Edge> edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.left, e.right});
  return out;
}

json bounds_json(const Bounds& b) {
  return {{"stated", b.stated.str()},
          {"crossing_threshold", b.crossing_threshold.str()},
          {"tree_bound", b.tree_bound.str()}};
}

CertificateCheck reject(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

std::string certificate_json(const Matching& host, std::size_t k, const WitnessReport& report, int indent) {
  json doc;
  doc["schema_version"] = kCertificateSchemaVersion;
  doc["k"] = k;
  doc["host"] = format_edge_list(host);
  doc["edge_count"] = host.edge_count();
  doc["bounds"] = bounds_json(report.bounds);
  if (!report.found()) {
    doc["kind"] = "below_threshold";
    doc["edges"] = report.witness ? edge_array(report.witness->edges()) : json::array();
  } else {
    const auto& w = *report.witness;
    doc["kind"] = std::string(to_string(w.kind()));
    doc["edges"] = edge_array(w.edges());
    if (w.kind() == WitnessKind::BrokenNesting) {
      doc["side"] = std::string(to_string(*w.side()));
      doc["breaker"] = {w.breaker()->left, w.breaker()->right};
    }
  }
  return doc.dump(indent) + "\n";
}

CertificateCheck verify_certificate(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    return reject(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (doc.value("schema_version", 0) != kCertificateSchemaVersion) return reject("unsupported schema_version");
    const auto k = doc.at("k").get<std::size_t>();
    const Matching host = parse_matching(doc.at("host").get<std::string>());
    const std::string kind = doc.at("kind").get<std::string>();

    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) {
      edges.push_back({pair.at(0).get<Vertex>(), pair.at(1).get<Vertex>()});
    }
    for (const auto& e : edges) {
      if (!host.has_edge(e)) return reject("edge " + format_edges(std::span(&e, 1)) + " is not in the host");
    }
    if (std::set<Edge>(edges.begin(), edges.end()).size() != edges.size()) return reject("repeated edge");

    const Bounds b = bounds(k);
    const auto& jb = doc.at("bounds");
    if (jb.at("stated").get<std::string>() != b.stated.str() ||
        jb.at("crossing_threshold").get<std::string>() != b.crossing_threshold.str() ||
        jb.at("tree_bound").get<std::string>() != b.tree_bound.str()) {
      return reject("bounds do not match k");
    }

    if (kind == "below_threshold") {
      if (!is_indecomposable(host)) return reject("host is decomposable");
      if (BigInt(host.edge_count()) >= b.tree_bound) return reject("host is not below the tree bound");
      if (!edges.empty()) {
        if (edges.size() >= k) return reject("partial witness already has k edges");
        const auto cls = classify_sequence(host, edges);
        if (!cls.is_proper || !cls.is_right_reaching) return reject("partial witness is not a proper right-reaching pin sequence");
      }
      return {true, {}};
    }

    if (edges.size() < k) return reject("witness has fewer than k edges");
    if (kind == "proper_pin_sequence") {
      const auto cls = classify_sequence(host, edges);
      if (!cls.is_pin_sequence || !cls.is_proper) return reject("edges are not a proper pin sequence");
      return {true, {}};
    }

    PatternKind pattern;
    if (kind == "interleaving") {
      pattern = PatternKind::Interleaving;
    } else if (kind == "broken_nesting") {
      const std::string side = doc.at("side").get<std::string>();
      if (side == "right") pattern = PatternKind::RightBrokenNesting;
      else if (side == "left") pattern = PatternKind::LeftBrokenNesting;
      else return reject("unknown side '" + side + "'");
      const Edge breaker{doc.at("breaker").at(0).get<Vertex>(), doc.at("breaker").at(1).get<Vertex>()};
      if (edges.front() != breaker) return reject("breaker is not the first edge");
      // The breaker owns the outermost vertex on its side of the pattern.
      for (const auto& e : edges) {
        if (pattern == PatternKind::RightBrokenNesting ? e.right > breaker.right : e.left < breaker.left) {
          return reject("breaker does not reach past the nest");
        }
      }
    } else {
      return reject("unknown kind '" + kind + "'");
    }
    if (!contains(subpattern(host, edges), canonical(pattern, edges.size()))) {
      return reject("edges do not induce the canonical " + std::string(to_string(pattern)));
    }
    return {true, {}};
  } catch (const json::exception& e) {
    return reject(std::string("bad certificate field: ") + e.what());
  } catch (const Error& e) {
    return reject(e.what());
  }
}

}  // namespace arcmatch
