#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <planext/planext.hpp>

namespace planext::cli {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct Io {
  std::ostream& out;
  std::ostream& err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write " + path);
  o << text;
}

inline std::string extension(const std::string& path) {
  const auto dot = path.rfind('.');
  const auto slash = path.find_last_of("/\\");
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return "";
  return path.substr(dot + 1);
}

// "g6" or "json", from --format or the file extension.
inline std::string input_format(const std::string& path, const std::string& forced) {
  const std::string f = forced.empty() ? extension(path) : forced;
  if (f == "g6" || f == "graph6") return "g6";
  if (f == "json") return "json";
  if (f == "dot") throw InputError("DOT is an export format and cannot be read; use .g6 or .json");
  throw InputError("cannot infer input format of " + path + "; pass --format g6|json");
}

inline AbstractGraph load_graph(const std::string& path, const std::string& forced) {
  const std::string fmt = input_format(path, forced);
  const std::string text = read_file(path);
  if (fmt == "g6") {
    std::string_view sv = text;
    while (!sv.empty() && (sv.back() == '\n' || sv.back() == '\r')) sv.remove_suffix(1);
    return read_graph6(sv);
  }
  return read_graph_json(text);
}

inline PlaneGraph load_embedding(const std::string& path, const std::string& forced) {
  if (input_format(path, forced) != "json") throw InputError("an embedding must be given as JSON with a \"rotation\" field");
  return read_embedding_json(read_file(path));
}

inline ForbiddenPattern load_pattern(const std::string& text) {
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) == 0) return ForbiddenPattern::custom(load_graph(text.substr(prefix.size()), "g6"));
  return ForbiddenPattern::parse(text);
}

inline std::string face_summary(const PlaneGraph& pg) {
  const FaceProfile fp = face_profile(pg);
  std::string s = "f=" + std::to_string(fp.f) + " faces";
  for (const auto& [size, count] : fp.f_i) s += " " + std::to_string(size) + ":" + std::to_string(count);
  return s;
}

// key=value lines; only workers and budget may be set this way.
struct FileDefaults {
  std::optional<int> workers;
  std::optional<double> budget;
};

inline FileDefaults read_config(const std::string& path) {
  FileDefaults d;
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    try {
      std::size_t used = 0;
      if (key == "workers") {
        d.workers = std::stoi(value, &used);
      } else if (key == "budget") {
        d.budget = std::stod(value, &used);
      } else {
        throw InputError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "' (config sets only workers, budget)");
      }
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw InputError(path + ":" + std::to_string(lineno) + ": bad value for " + key);
    }
  }
  return d;
}

struct ConstructOpts {
  std::string family;
  int k = -1;
  int n = -1;
  std::string format = "json";
  std::string out;
};

inline int cmd_construct(const ConstructOpts& o, Io io) {
  auto need = [&](int v, const char* flag) {
    if (v < 0) throw InputError("family " + o.family + " needs " + flag);
    return v;
  };
  PlaneGraph pg;
  std::string extra;
  if (o.family == "icosidodecahedron") {
    pg = icosidodecahedron();
  } else if (o.family == "c4-family") {
    pg = c4_family(need(o.k, "--k"));
  } else if (o.family == "k2n" || o.family == "complete-bipartite-2") {
    pg = complete_bipartite_2(need(o.n, "--n"));
  } else if (o.family == "double-wheel") {
    pg = double_wheel(need(o.n, "--n"));
  } else if (o.family == "figure5") {
    pg = figure5_graph();
  } else if (o.family == "diamond") {
    pg = diamond();
  } else if (o.family == "triangulation-t") {
    const MarkedTriangulation t = triangulation_T(need(o.k, "--k"));
    pg = t.graph;
    extra = " matching";
    for (const Edge& e : t.matching) extra += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  } else if (o.family == "diamond-holder") {
    pg = diamond_holder().graph;
  } else if (o.family == "snowflake") {
    pg = snowflake().graph;
  } else if (o.family == "c5-family") {
    pg = c5_family(need(o.k, "--k"));
  } else {
    throw InputError("unknown family '" + o.family +
                     "'; one of icosidodecahedron, c4-family, k2n, double-wheel, figure5, diamond, triangulation-t, "
                     "diamond-holder, snowflake, c5-family");
  }
  std::string body;
  if (o.format == "json") body = embedding_json(pg).dump(1) + "\n";
  else if (o.format == "g6") body = write_graph6(pg.graph()) + "\n";
  else if (o.format == "dot") body = to_dot(pg.graph());
  else throw InputError("--format must be json, g6 or dot");
  const std::string summary = "n=" + std::to_string(pg.order()) + " e=" + std::to_string(pg.edge_count()) + " " + face_summary(pg) + extra;
  std::ostream& report = o.out == "-" ? io.err : io.out;
  if (o.out == "-") io.out << body;
  else if (!o.out.empty()) write_file(o.out, body);
  report << summary << "\n";
  return kOk;
}

struct CheckOpts {
  std::string input;
  std::string format;
  std::string pattern;
  bool embedding = false;
};

inline int cmd_check(const CheckOpts& o, Io io) {
  const ForbiddenPattern p = load_pattern(o.pattern);
  AbstractGraph g;
  bool euler_ok = true;
  if (o.embedding) {
    const PlaneGraph pg = load_embedding(o.input, o.format);
    euler_ok = euler_check(pg);
    g = pg.graph();
  } else {
    g = load_graph(o.input, o.format);
  }
  io.out << "n=" << g.order() << " e=" << g.edge_count() << "\n";
  int code = kOk;
  if (o.embedding) {
    io.out << "euler: " << (euler_ok ? "valid" : "FAILS (not a plane embedding)") << "\n";
    if (!euler_ok) code = kViolation;
  }
  const PatternMatch m = contains_pattern(g, p);
  if (m.found) {
    io.out << "contains " << p.name() << ":";
    for (int v : m.witness) io.out << " " << v;
    io.out << "\n";
    code = kViolation;
  } else {
    io.out << p.name() << "-free\n";
  }
  return code;
}

struct AuditOpts {
  std::string input;
  std::string format;
  std::string pattern;
  bool json = false;
};

inline int cmd_audit(const AuditOpts& o, Io io) {
  if (o.pattern != "c4" && o.pattern != "c5") throw InputError("--forbid must be c4 or c5");
  const PlaneGraph pg = load_embedding(o.input, o.format);
  const AuditReport r = o.pattern == "c4" ? audit_c4(pg) : audit_c5(pg);
  if (o.json) {
    io.out << audit_json(r, o.pattern).dump(1) << "\n";
  } else {
    io.out << "n=" << pg.order() << " e=" << pg.edge_count() << " " << face_summary(pg) << "\n";
    for (const auto& e : r.entries) {
      io.out << "(" << e.id << ") " << e.description << " : ";
      if (!e.applicable) {
        io.out << "n/a (" << e.note << ")\n";
        continue;
      }
      io.out << e.lhs.str() << " " << relation_symbol(e.relation) << " " << e.rhs.str() << "  "
             << (e.holds ? "holds" : "FAILS") << (e.tight ? " [tight]" : "") << "\n";
    }
  }
  return r.all_applicable_hold() ? kOk : kViolation;
}

struct ReduceOpts {
  std::string input;
  std::string format;
  std::string mode = "prime";
  std::string out;
};

inline int cmd_reduce(const ReduceOpts& o, Io io) {
  const PlaneGraph pg = load_embedding(o.input, o.format);
  PlaneGraph r;
  if (o.mode == "prime") r = reduce_prime(pg);
  else if (o.mode == "k4centers") r = reduce_k4_centers(pg);
  else throw InputError("--mode must be prime or k4centers");
  io.out << "before n=" << pg.order() << " e=" << pg.edge_count() << "\n";
  io.out << "after  n=" << r.order() << " e=" << r.edge_count() << "\n";
  if (r.order() == pg.order() && r.edge_count() == pg.edge_count()) io.out << "unchanged\n";
  if (!o.out.empty()) write_file(o.out, embedding_json(r).dump(1) + "\n");
  if (o.mode != "prime") return kOk;
  const long long lhs = static_cast<long long>(r.edge_count()), rhs = 2LL * r.order() - 4;
  const bool holds = lhs <= rhs;
  io.out << "e(G') <= 2|G'|-4: " << lhs << " <= " << rhs << " " << (holds ? "holds" : "fails") << "\n";
  // The law is only claimed for C5-free 2-connected inputs of minimum degree >= 3.
  const DegreeProfile dp = degree_profile(pg.graph());
  const bool hyp = dp.min_degree && *dp.min_degree >= 3 && graph_stats(pg.graph()).vertex_connectivity_at_least_2 &&
                   !contains_pattern(pg.graph(), ForbiddenPattern::cycle(5)).found;
  if (!hyp) io.out << "input is not C5-free, 2-connected with minimum degree >= 3; check is informational\n";
  return hyp && !holds ? kViolation : kOk;
}

struct SearchOpts {
  int n = 0;
  std::string pattern;
  std::optional<int> workers;
  std::optional<double> budget;
  bool json = false;
  bool deterministic = false;
  bool allow_disconnected = false;
  bool restrict = false;
  int witness_cap = 100;
};

inline int cmd_search(const SearchOpts& o, Io io) {
  SearchConfig cfg;
  cfg.n = o.n;
  cfg.pattern = load_pattern(o.pattern);
  cfg.workers = o.workers.value_or(1);
  cfg.max_seconds = o.budget;
  cfg.connected_only = !o.allow_disconnected;
  cfg.restrict_2conn_mindeg3 = o.restrict;
  if (o.witness_cap < 0) throw InputError("--witness-cap must be >= 0");
  cfg.witness_cap = static_cast<std::size_t>(o.witness_cap);
  cfg.progress = [&](const std::string& line) { io.err << "search: " << line << "\n"; };
  SearchResult r = extremal_search(cfg);
  if (o.deterministic) r.elapsed_seconds = 0;
  if (o.json) {
    io.out << search_json(r).dump(1) << "\n";
  } else {
    io.out << "n=" << r.n << " forbid=" << r.pattern << (r.restricted ? " (2-connected min-degree-3 restricted)" : "")
           << (r.connected_only ? "" : " (disconnected allowed)") << "\n";
    io.out << "ex=" << (r.max_edges ? std::to_string(*r.max_edges) : std::string("none")) << (r.complete ? "" : " (partial)")
           << "\n";
    io.out << "witnesses " << r.witness_count << (r.witnesses_truncated ? " (listing first " + std::to_string(r.witnesses.size()) + ")" : "")
           << "\n";
    for (const auto& w : r.witnesses) io.out << "  " << w << "\n";
    io.out << "nodes " << r.nodes_explored << " seconds " << r.elapsed_seconds << "\n";
  }
  if (!r.complete) {
    io.err << "search: budget exhausted; result is partial\n";
    return kBudget;
  }
  return kOk;
}

struct BoundsOpts {
  int n = 0;
  std::string pattern;
};

inline int cmd_bounds(const BoundsOpts& o, Io io) {
  const auto rep = bounds_for(o.pattern, o.n);
  if (!rep) throw InputError("--forbid must be one of c3, k3, c4, c5, k4");
  if (rep->applicable.empty())
    throw InputError("no bound for " + o.pattern + " at n=" + std::to_string(o.n) + "; valid for n >= " + std::to_string(rep->min_n));
  const ClosedFormBound* best = nullptr;
  for (const auto& b : rep->applicable) {
    io.out << b.formula << " = " << b.value.str() << ", floor " << b.value.floor() << "\n";
    if (!best || b.value < best->value) best = &b;
  }
  for (const auto& b : rep->pending) io.out << b.formula << " not applicable below n=" << b.min_n << "\n";
  if (rep->applicable.size() > 1) io.out << "tighter: " << best->formula << ", floor " << best->value.floor() << "\n";
  return kOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Io io{out, err};
  CLI::App app{"planext: extremal planar graphs with forbidden cycles"};
  app.require_subcommand(1);
  std::string config;
  app.add_option("--config", config, "key=value file setting default workers/budget");

  ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "build a named construction");
  construct->add_option("family", co.family, "construction family")->required();
  construct->add_option("--k", co.k, "family parameter k");
  construct->add_option("--n", co.n, "vertex count");
  construct->add_option("--format", co.format, "json|g6|dot");
  construct->add_option("--out", co.out, "output path ('-' for stdout)");

  CheckOpts ch;
  auto* check = app.add_subcommand("check", "test pattern-freeness");
  check->add_option("--input", ch.input, "graph file (.g6 or .json)")->required();
  check->add_option("--format", ch.format, "g6|json (overrides the extension)");
  check->add_option("--free", ch.pattern, "c<k>, k<r> or custom:<file.g6>")->required();
  check->add_flag("--embedding", ch.embedding, "input is an embedding; also run the Euler check");

  AuditOpts au;
  auto* audit = app.add_subcommand("audit", "evaluate the face-count inequalities on an embedding");
  audit->add_option("--input", au.input, "embedding JSON")->required();
  audit->add_option("--format", au.format, "json");
  audit->add_option("--forbid", au.pattern, "c4|c5")->required();
  audit->add_flag("--json", au.json, "machine-readable report");

  ReduceOpts re;
  auto* reduce = app.add_subcommand("reduce", "apply a reduction to an embedding");
  reduce->add_option("--input", re.input, "embedding JSON")->required();
  reduce->add_option("--format", re.format, "json");
  reduce->add_option("--mode", re.mode, "prime|k4centers");
  reduce->add_option("--out", re.out, "write the reduced embedding");

  SearchOpts so;
  int workers = 0;
  double budget = 0;
  auto* search = app.add_subcommand("search", "exact ex(n,H) over planar graphs");
  search->add_option("--n", so.n, "vertex count")->required();
  search->add_option("--forbid", so.pattern, "c<k>, k<r> or custom:<file.g6>")->required();
  auto* wopt = search->add_option("--workers", workers, "worker threads (default PLANEXT_WORKERS or 1)");
  auto* bopt = search->add_option("--budget", budget, "seconds before giving up (exit 3)");
  search->add_flag("--json", so.json, "machine-readable result");
  search->add_flag("--deterministic", so.deterministic, "zero elapsed_seconds");
  search->add_flag("--allow-disconnected", so.allow_disconnected, "count disconnected graphs too");
  search->add_flag("--restrict-2conn-mindeg3", so.restrict, "count only 2-connected graphs of minimum degree >= 3");
  search->add_option("--witness-cap", so.witness_cap, "witnesses listed (default 100)");

  BoundsOpts bo;
  auto* bounds = app.add_subcommand("bounds", "closed-form upper bounds");
  bounds->add_option("--n", bo.n, "vertex count")->required();
  bounds->add_option("--forbid", bo.pattern, "c3|k3|c4|c5|k4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (search->parsed()) {
      FileDefaults fd;
      if (!config.empty()) fd = read_config(config);
      std::optional<int> env_workers;
      if (const char* s = std::getenv("PLANEXT_WORKERS"); s && *s) {
        try {
          std::size_t used = 0;
          env_workers = std::stoi(s, &used);
          if (used != std::string(s).size()) throw std::invalid_argument(s);
        } catch (const std::logic_error&) {
          throw InputError(std::string("PLANEXT_WORKERS is not an integer: ") + s);
        }
      }
      so.workers = wopt->count() ? std::optional<int>(workers) : fd.workers ? fd.workers : env_workers;
      so.budget = bopt->count() ? std::optional<double>(budget) : fd.budget;
      return cmd_search(so, io);
    }
    if (!config.empty()) read_config(config);
    if (construct->parsed()) return cmd_construct(co, io);
    if (check->parsed()) return cmd_check(ch, io);
    if (audit->parsed()) return cmd_audit(au, io);
    if (reduce->parsed()) return cmd_reduce(re, io);
    if (bounds->parsed()) return cmd_bounds(bo, io);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace planext::cli
