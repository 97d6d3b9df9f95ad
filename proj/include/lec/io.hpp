#ifndef LEC_IO_HPP
#define LEC_IO_HPP

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lec/cnf.hpp"
#include "lec/instance.hpp"
#include "lec/reduce_multi.hpp"
#include "lec/reduce_simple.hpp"

namespace lec {

// --- instance text format -------------------------------------------------
//
//   lec 1
//   mode multi|simple
//   vertices N
//   color <id> <name>
//   edge <id> <u> <v> <c1> <c2> ...
//
// '#' starts a comment; edge and color ids are dense from 0.

inline void write_instance(std::ostream& os, const LecInstance& inst) {
  os << "lec 1\n";
  os << "mode " << (inst.mode == GraphMode::Multigraph ? "multi" : "simple")
     << "\n";
  os << "vertices " << inst.num_vertices << "\n";
  for (size_t i = 0; i < inst.colors.size(); ++i)
    os << "color " << i << " " << color_name(inst.colors[i]) << "\n";
  for (int e = 0; e < inst.num_edges(); ++e) {
    const LecEdge& edge = inst.edges[static_cast<size_t>(e)];
    os << "edge " << e << " " << edge.u << " " << edge.v;
    for (int c : edge.list) os << " " << c;
    os << "\n";
  }
}

inline LecInstance read_instance(std::istream& is) {
  LecInstance inst;
  bool saw_header = false, saw_mode = false, saw_vertices = false;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto fail = [&](const std::string& msg) {
      throw parse_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (word == "lec") {
      int version;
      if (!(ls >> version) || version != 1) fail("unsupported format version");
      saw_header = true;
    } else if (word == "mode") {
      std::string m;
      if (!(ls >> m)) fail("missing mode");
      if (m == "multi") inst.mode = GraphMode::Multigraph;
      else if (m == "simple") inst.mode = GraphMode::Simple;
      else fail("unknown mode '" + m + "'");
      saw_mode = true;
    } else if (word == "vertices") {
      if (!(ls >> inst.num_vertices) || inst.num_vertices < 0)
        fail("bad vertex count");
      saw_vertices = true;
    } else if (word == "color") {
      int id;
      std::string name;
      if (!(ls >> id >> name)) fail("bad color line");
      if (id != static_cast<int>(inst.colors.size()))
        fail("color ids must be dense from 0");
      try {
        inst.colors.push_back(parse_color_name(name));
      } catch (const std::exception& ex) {
        fail(ex.what());
      }
    } else if (word == "edge") {
      int id;
      LecEdge e;
      if (!(ls >> id >> e.u >> e.v)) fail("bad edge line");
      if (id != inst.num_edges()) fail("edge ids must be dense from 0");
      if (e.u == e.v) fail("loop edge");
      if (e.u < 0 || e.v < 0 || e.u >= inst.num_vertices ||
          e.v >= inst.num_vertices)
        fail("edge endpoint out of range");
      int c;
      while (ls >> c) {
        if (c < 0 || c >= static_cast<int>(inst.colors.size()))
          fail("color id out of range");
        e.list.push_back(c);
      }
      if (e.list.empty()) fail("empty color list");
      std::sort(e.list.begin(), e.list.end());
      e.list.erase(std::unique(e.list.begin(), e.list.end()), e.list.end());
      inst.edges.push_back(std::move(e));
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  if (!saw_header) throw parse_error("missing 'lec 1' header");
  if (!saw_mode) throw parse_error("missing 'mode' line");
  if (!saw_vertices) throw parse_error("missing 'vertices' line");
  if (inst.mode == GraphMode::Simple) {
    std::set<std::pair<int, int>> pairs;
    for (const LecEdge& e : inst.edges)
      if (!pairs.insert(std::minmax(e.u, e.v)).second)
        throw parse_error("parallel edge in simple mode");
  }
  return inst;
}

inline std::string write_instance_string(const LecInstance& inst) {
  std::ostringstream os;
  write_instance(os, inst);
  return os.str();
}

inline LecInstance read_instance_string(const std::string& s) {
  std::istringstream is(s);
  return read_instance(is);
}

// --- coloring format: one `set <edge_id> <color_id>` line per edge --------

inline void write_coloring(std::ostream& os, const Coloring& c) {
  for (size_t e = 0; e < c.assignment.size(); ++e)
    os << "set " << e << " " << c.assignment[e] << "\n";
}

inline Coloring read_coloring(std::istream& is, int num_edges) {
  Coloring c;
  c.assignment.assign(static_cast<size_t>(num_edges), -1);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    int e, col;
    if (word != "set" || !(ls >> e >> col))
      throw parse_error("line " + std::to_string(lineno) + ": expected 'set <edge> <color>'");
    if (e < 0 || e >= num_edges)
      throw parse_error("line " + std::to_string(lineno) + ": edge id out of range");
    c.assignment[static_cast<size_t>(e)] = col;
  }
  if (!c.total()) throw parse_error("coloring leaves edges unset");
  return c;
}

// --- provenance JSON ------------------------------------------------------

inline const char* multi_role_kind_name(MultiRole::Kind k) {
  switch (k) {
    case MultiRole::ClauseEdge1: return "clause_edge1";
    case MultiRole::ClauseEdge23: return "clause_edge23";
    case MultiRole::PositiveVar: return "positive_var";
    case MultiRole::NegativeVar: return "negative_var";
  }
  return "?";
}

inline MultiRole::Kind multi_role_kind_from(const std::string& s) {
  if (s == "clause_edge1") return MultiRole::ClauseEdge1;
  if (s == "clause_edge23") return MultiRole::ClauseEdge23;
  if (s == "positive_var") return MultiRole::PositiveVar;
  if (s == "negative_var") return MultiRole::NegativeVar;
  throw parse_error("unknown multi role kind '" + s + "'");
}

inline nlohmann::json multi_provenance_to_json(const MultiProvenance& p) {
  nlohmann::json roles = nlohmann::json::array();
  for (const MultiRole& r : p.roles)
    roles.push_back({{"kind", multi_role_kind_name(r.kind)},
                     {"r", r.r},
                     {"clause", r.clause},
                     {"slot", r.slot},
                     {"var", r.var}});
  return {{"mode", "multi"}, {"R", p.R}, {"num_vars", p.num_vars}, {"roles", roles}};
}

inline MultiProvenance multi_provenance_from_json(const nlohmann::json& j) {
  MultiProvenance p;
  p.R = j.at("R").get<int>();
  p.num_vars = j.at("num_vars").get<int>();
  for (const auto& r : j.at("roles"))
    p.roles.push_back({multi_role_kind_from(r.at("kind").get<std::string>()),
                       r.at("r").get<int>(), r.at("clause").get<int>(),
                       r.at("slot").get<int>(), r.at("var").get<int>()});
  return p;
}

inline const char* simple_role_kind_name(SimpleRole::Kind k) {
  switch (k) {
    case SimpleRole::InitEdge: return "init";
    case SimpleRole::FinalEdge: return "final";
    case SimpleRole::VarStep: return "var_step";
    case SimpleRole::ClauseStep1: return "clause_step1";
    case SimpleRole::ClauseStep2: return "clause_step2";
    case SimpleRole::JumpA: return "jump_a";
    case SimpleRole::JumpB: return "jump_b";
    case SimpleRole::JumpZ3: return "jump_z3";
    case SimpleRole::JumpZ5: return "jump_z5";
  }
  return "?";
}

inline SimpleRole::Kind simple_role_kind_from(const std::string& s) {
  if (s == "init") return SimpleRole::InitEdge;
  if (s == "final") return SimpleRole::FinalEdge;
  if (s == "var_step") return SimpleRole::VarStep;
  if (s == "clause_step1") return SimpleRole::ClauseStep1;
  if (s == "clause_step2") return SimpleRole::ClauseStep2;
  if (s == "jump_a") return SimpleRole::JumpA;
  if (s == "jump_b") return SimpleRole::JumpB;
  if (s == "jump_z3") return SimpleRole::JumpZ3;
  if (s == "jump_z5") return SimpleRole::JumpZ5;
  throw parse_error("unknown simple role kind '" + s + "'");
}

inline nlohmann::json simple_provenance_to_json(const SimpleProvenance& p) {
  nlohmann::json roles = nlohmann::json::array();
  for (const SimpleRole& r : p.roles)
    roles.push_back({{"kind", simple_role_kind_name(r.kind)},
                     {"var", r.var},
                     {"clause", r.clause},
                     {"j", r.j},
                     {"layer", r.layer}});
  nlohmann::json ztab = nlohmann::json::array();
  for (const auto& [key, vertex] : p.ztab)
    ztab.push_back({{"layer", key.first}, {"clause", key.second}, {"vertex", vertex}});
  nlohmann::json clauses = nlohmann::json::array();
  for (const Clause& c : p.clauses) {
    nlohmann::json lits = nlohmann::json::array();
    for (const Literal& l : c) lits.push_back(l.positive ? l.var + 1 : -(l.var + 1));
    clauses.push_back(lits);
  }
  return {{"mode", "simple"},
          {"layout", {{"s", p.layout.s}, {"R", p.layout.R}}},
          {"vtab", p.vtab},
          {"ztab", ztab},
          {"roles", roles},
          {"num_vars", p.num_vars},
          {"clauses", clauses},
          {"clause_class", p.clause_class}};
}

inline SimpleProvenance simple_provenance_from_json(const nlohmann::json& j) {
  SimpleProvenance p;
  p.layout.s = j.at("layout").at("s").get<int>();
  p.layout.R = j.at("layout").at("R").get<int>();
  p.vtab = j.at("vtab").get<std::vector<std::vector<int>>>();
  for (const auto& z : j.at("ztab"))
    p.ztab[{z.at("layer").get<int>(), z.at("clause").get<int>()}] =
        z.at("vertex").get<int>();
  for (const auto& r : j.at("roles"))
    p.roles.push_back({simple_role_kind_from(r.at("kind").get<std::string>()),
                       r.at("var").get<int>(), r.at("clause").get<int>(),
                       r.at("j").get<int>(), r.at("layer").get<int>()});
  p.num_vars = j.at("num_vars").get<int>();
  for (const auto& lits : j.at("clauses")) {
    Clause c;
    for (int raw : lits.get<std::vector<int>>()) {
      if (raw == 0) throw parse_error("zero literal in provenance clause");
      c.push_back(Literal{std::abs(raw) - 1, raw > 0});
    }
    p.clauses.push_back(std::move(c));
  }
  p.clause_class = j.at("clause_class").get<std::vector<int>>();
  return p;
}

}  // namespace lec

#endif
