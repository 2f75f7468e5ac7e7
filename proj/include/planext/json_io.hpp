#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "audit.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "search.hpp"

namespace planext {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
}

inline void check_schema(const Json& j) {
  if (!j.is_object()) throw InputError("JSON graph must be an object");
  if (j.contains("schema_version") && (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != kSchemaVersion))
    throw InputError("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
}

// Reads an array of n neighbor lists, naming vertex and position on bad entries.
inline std::vector<std::vector<int>> read_lists(const Json& j, const char* key) {
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("missing integer field \"n\"");
  const long long n = j["n"].get<long long>();
  if (n < 0 || n > 1000000) throw InputError("field \"n\" out of range");
  if (!j.contains(key) || !j[key].is_array()) throw InputError(std::string("missing array field \"") + key + "\"");
  const Json& a = j[key];
  if (static_cast<long long>(a.size()) != n)
    throw InputError(std::string("\"") + key + "\" has " + std::to_string(a.size()) + " entries, n is " + std::to_string(n));
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (!a[v].is_array()) throw InputError("vertex " + std::to_string(v) + ": neighbor list is not an array");
    for (std::size_t i = 0; i < a[v].size(); ++i) {
      const Json& x = a[v][i];
      if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= n)
        throw InputError("vertex " + std::to_string(v) + ", position " + std::to_string(i) + ": invalid neighbor id " + x.dump());
      out[v].push_back(x.get<int>());
    }
  }
  return out;
}

}  // namespace detail

inline Json embedding_json(const PlaneGraph& pg) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = pg.order();
  j["rotation"] = pg.rotation();
  return j;
}

inline PlaneGraph read_embedding_json(std::string_view text) {
  const Json j = detail::parse_json(text);
  detail::check_schema(j);
  Rotation rot = detail::read_lists(j, "rotation");
  return build_plane_graph(std::move(rot));
}

inline Json adjacency_json(const AbstractGraph& g) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = g.order();
  Json adj = Json::array();
  for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));
  j["adjacency"] = std::move(adj);
  return j;
}

// Accepts either an adjacency document or an embedding document (its rotation read as adjacency).
inline AbstractGraph read_graph_json(std::string_view text) {
  const Json j = detail::parse_json(text);
  detail::check_schema(j);
  if (j.contains("adjacency")) return AbstractGraph::from_adjacency(detail::read_lists(j, "adjacency"));
  if (j.contains("rotation")) return read_embedding_json(text).graph();
  throw InputError("JSON graph needs an \"adjacency\" or \"rotation\" field");
}

inline Json search_json(const SearchResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = r.n;
  j["pattern"] = r.pattern;
  j["connected_only"] = r.connected_only;
  j["restricted_2connected_mindeg3"] = r.restricted;
  j["max_edges"] = r.max_edges ? Json(*r.max_edges) : Json(nullptr);
  j["witness_count"] = r.witness_count;
  j["witnesses"] = r.witnesses;
  j["witness_cap"] = r.witness_cap;
  j["witnesses_truncated"] = r.witnesses_truncated;
  j["nodes_explored"] = r.nodes_explored;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["complete"] = r.complete;
  return j;
}

inline Json audit_json(const AuditReport& r, const std::string& pattern) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["pattern"] = pattern;
  j["all_applicable_hold"] = r.all_applicable_hold();
  Json rows = Json::array();
  for (const auto& e : r.entries) {
    Json row;
    row["id"] = e.id;
    row["inequality"] = e.description;
    row["applicable"] = e.applicable;
    if (e.applicable) {
      row["lhs"] = e.lhs.str();
      row["relation"] = relation_symbol(e.relation);
      row["rhs"] = e.rhs.str();
      row["holds"] = e.holds;
      row["tight"] = e.tight;
    } else {
      row["reason"] = e.note;
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

inline std::string to_dot(const AbstractGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace planext
