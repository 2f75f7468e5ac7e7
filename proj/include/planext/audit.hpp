#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "embedding.hpp"
#include "error.hpp"
#include "patterns.hpp"
#include "rational.hpp"

namespace planext {

enum class Relation { le, ge, eq };

inline const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    default: return "=";
  }
}

struct AuditEntry {
  std::string id;
  std::string description;
  Relation relation = Relation::le;
  Rational lhs;
  Rational rhs;
  bool applicable = true;
  bool holds = true;
  bool tight = false;
  std::string note;  // reason when inapplicable
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  bool all_applicable_hold() const {
    for (const auto& e : entries)
      if (e.applicable && !e.holds) return false;
    return true;
  }

  const AuditEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
};

namespace detail {

inline AuditEntry evaluate(std::string id, std::string description, Rational lhs, Relation rel, Rational rhs) {
  AuditEntry e;
  e.id = std::move(id);
  e.description = std::move(description);
  e.relation = rel;
  e.lhs = lhs;
  e.rhs = rhs;
  switch (rel) {
    case Relation::le: e.holds = lhs <= rhs; break;
    case Relation::ge: e.holds = lhs >= rhs; break;
    case Relation::eq: e.holds = lhs == rhs; break;
  }
  e.tight = lhs == rhs;
  return e;
}

inline AuditEntry inapplicable(std::string id, std::string description, Relation rel, std::string why) {
  AuditEntry e;
  e.id = std::move(id);
  e.description = std::move(description);
  e.relation = rel;
  e.applicable = false;
  e.holds = false;
  e.note = std::move(why);
  return e;
}

inline void require_free(const PlaneGraph& pg, const ForbiddenPattern& p) {
  detail::require_euler(pg);
  if (contains_pattern(pg.graph(), p))
    throw InapplicableError("input contains " + p.name() + "; the audit assumes the graph is " + p.name() + "-free");
}

}  // namespace detail

inline AuditReport audit_c4(const PlaneGraph& pg) {
  if (pg.order() < 4) throw InapplicableError("audit_c4 needs n >= 4");
  detail::require_free(pg, ForbiddenPattern::cycle(4));
  const FaceProfile fp = face_profile(pg);
  const Rational n(pg.order()), e(static_cast<long long>(pg.edge_count())), f(fp.f), f3(fp.count(3));
  AuditReport r;
  r.entries.push_back(detail::evaluate("a", "f <= 2(e+f3)/5", f, Relation::le, Rational(2) * (e + f3) / Rational(5)));
  r.entries.push_back(detail::evaluate("b", "f3 <= e/3", f3, Relation::le, e / Rational(3)));
  r.entries.push_back(detail::evaluate("c", "f <= 8e/15", f, Relation::le, Rational(8) * e / Rational(15)));
  r.entries.push_back(detail::evaluate("d", "e <= 15(n-2)/7", e, Relation::le, Rational(15) * (n - Rational(2)) / Rational(7)));
  return r;
}

inline AuditReport audit_c5(const PlaneGraph& pg) {
  if (pg.order() < 5) throw InapplicableError("audit_c5 needs n >= 5");
  detail::require_free(pg, ForbiddenPattern::cycle(5));
  const FaceProfile fp = face_profile(pg);
  const EdgeFaceClassification ec = classify_edges(pg);
  const DegreeProfile dp = degree_profile(pg.graph());
  const GraphStats gs = graph_stats(pg.graph());
  const bool min3 = dp.min_degree && *dp.min_degree >= 3;
  const bool kappa2 = gs.vertex_connectivity_at_least_2;

  const Rational n(pg.order()), e(static_cast<long long>(pg.edge_count()));
  const Rational f3(fp.count(3)), f4(fp.count(4)), f5(fp.count(5)), f31(fp.f31);
  const Rational e3(ec.e(3));
  AuditReport r;
  auto& out = r.entries;

  out.push_back(detail::evaluate("a", "f3 <= e3/2", f3, Relation::le, e3 / Rational(2)));
  if (min3)
    out.push_back(detail::evaluate("b", "f4 <= (e-e3)/2", f4, Relation::le, (e - e3) / Rational(2)));
  else
    out.push_back(detail::inapplicable("b", "f4 <= (e-e3)/2", Relation::le, "minimum degree below 3"));
  if (min3)
    out.push_back(detail::evaluate("c", "f5 = 0", f5, Relation::eq, Rational(0)));
  else
    out.push_back(detail::inapplicable("c", "f5 = 0", Relation::eq, "minimum degree below 3"));
  out.push_back(detail::evaluate("d", "e <= 12(n-2)/5", e, Relation::le, Rational(12) * (n - Rational(2)) / Rational(5)));

  const bool reduced = min3 && kappa2;
  const char* why = min3 ? "graph not 2-connected" : "minimum degree below 3";
  const char* e1 = "e(G') <= 2|G'|-4";
  const char* e2 = "f3' = e3'/3";
  const char* e3d = "edges of G' on two triangular faces = 0";
  const char* e4 = "edges of G' between a 4-face and a triangular face = 0";
  const char* fd = "2d2' + d3' >= 4|G'| - 2e(G')";
  const char* hd = "f31 + sum_{i>=7} (i-6) f_i >= d2'";
  if (reduced) {
    const PlaneGraph gp = reduce_prime(pg);
    const FaceProfile fpp = face_profile(gp);
    const EdgeFaceClassification ecp = classify_edges(gp);
    const DegreeProfile dpp = degree_profile(gp.graph());
    const Rational np(gp.order()), ep(static_cast<long long>(gp.edge_count()));
    auto d = [&](int k) { auto it = dpp.counts.find(k); return Rational(it == dpp.counts.end() ? 0 : it->second); };
    out.push_back(detail::evaluate("e1", e1, ep, Relation::le, Rational(2) * np - Rational(4)));
    out.push_back(detail::evaluate("e2", e2, Rational(fpp.count(3)), Relation::eq, Rational(ecp.e(3)) / Rational(3)));
    out.push_back(detail::evaluate("e3", e3d, Rational(ecp.e_pair(3, 3)), Relation::eq, Rational(0)));
    out.push_back(detail::evaluate("e4", e4, Rational(ecp.e_pair(3, 4)), Relation::eq, Rational(0)));
    out.push_back(detail::evaluate("f", fd, Rational(2) * d(2) + d(3), Relation::ge, Rational(4) * np - Rational(2) * ep));
    Rational big(0);
    for (const auto& [size, count] : fp.f_i)
      if (size >= 7) big = big + Rational(static_cast<long long>(size - 6) * count);
    out.push_back(detail::evaluate("g", "f31 <= 2e3 - 4f3", f31, Relation::le, Rational(2) * e3 - Rational(4) * f3));
    out.push_back(detail::evaluate("h", hd, f31 + big, Relation::ge, d(2)));
  } else {
    for (auto [id, desc, rel] : {std::tuple{"e1", e1, Relation::le}, std::tuple{"e2", e2, Relation::eq},
                                 std::tuple{"e3", e3d, Relation::eq}, std::tuple{"e4", e4, Relation::eq},
                                 std::tuple{"f", fd, Relation::ge}})
      out.push_back(detail::inapplicable(id, desc, rel, why));
    out.push_back(detail::evaluate("g", "f31 <= 2e3 - 4f3", f31, Relation::le, Rational(2) * e3 - Rational(4) * f3));
    out.push_back(detail::inapplicable("h", hd, Relation::ge, why));
  }
  if (pg.order() >= 11)
    out.push_back(detail::evaluate("i", "e <= (12n-33)/5", e, Relation::le, (Rational(12) * n - Rational(33)) / Rational(5)));
  else
    out.push_back(detail::inapplicable("i", "e <= (12n-33)/5", Relation::le, "n below 11"));
  return r;
}

}  // namespace planext
