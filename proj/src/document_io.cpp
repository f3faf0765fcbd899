#include "axokern/document_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace axokern {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where,
                             const std::string& what) {
  fail(ErrorCode::kParseError, where + ": " + what);
}

const json& require_key(const json& obj, const char* key,
                        const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing key '") + key + "'");
  return *it;
}

Float read_number(const json& j, const std::string& where) {
  if (!j.is_number()) parse_fail(where, "expected a number");
  return static_cast<Float>(j.get<double>());
}

V2 read_v2(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    parse_fail(where, "expected an array of 2 numbers");
  return {read_number(j[0], where), read_number(j[1], where)};
}

V3 read_v3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    parse_fail(where, "expected an array of 3 numbers");
  return {read_number(j[0], where), read_number(j[1], where),
          read_number(j[2], where)};
}

std::string read_string(const json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "expected a string");
  return j.get<std::string>();
}

ProjectionOp read_projection(const json& j, const std::string& where) {
  ProjectionOp op;
  const json& m = require_key(j, "m", where);
  if (!m.is_array() || m.size() != 6)
    parse_fail(where + ".m", "expected an array of 6 numbers (row-major 2x3)");
  for (std::size_t i = 0; i < 6; ++i)
    op.m[i] = read_number(m[i], where + ".m");
  op.shift = j.contains("shift") ? read_v2(j["shift"], where + ".shift")
                                 : V2{0.0f, 0.0f};
  return op;
}

void read_pipes(const json& doc, Schematic& s) {
  if (!doc.contains("pipes")) return;
  const json& pipes = doc["pipes"];
  if (!pipes.is_array()) parse_fail("pipes", "expected an array");
  for (std::size_t i = 0; i < pipes.size(); ++i) {
    const std::string where = "pipes[" + std::to_string(i) + "]";
    const json& jp = pipes[i];
    Pipe p;
    p.id = read_string(require_key(jp, "id", where), where + ".id");
    p.a = read_v3(require_key(jp, "a", where), where + ".a");
    p.b = read_v3(require_key(jp, "b", where), where + ".b");
    s.pipes.push_back(std::move(p));
  }
}

void read_library(const json& doc, Schematic& s) {
  if (!doc.contains("library")) return;
  const json& lib = doc["library"];
  if (!lib.is_array()) parse_fail("library", "expected an array");
  for (std::size_t i = 0; i < lib.size(); ++i) {
    const std::string where = "library[" + std::to_string(i) + "]";
    const json& jb = lib[i];
    Block b;
    b.id = read_string(require_key(jb, "id", where), where + ".id");
    if (jb.contains("cut") && !jb["cut"].is_null()) {
      const json& cut = jb["cut"];
      if (!cut.is_array() || cut.size() != 2)
        parse_fail(where + ".cut", "expected [lo, hi]");
      CutInterval interval{read_number(cut[0], where + ".cut"),
                           read_number(cut[1], where + ".cut")};
      if (interval.lo > interval.hi)
        parse_fail(where + ".cut", "lo exceeds hi");
      b.cut = interval;
    }
    if (jb.contains("polylines")) {
      const json& polys = jb["polylines"];
      if (!polys.is_array()) parse_fail(where + ".polylines", "expected an array");
      for (std::size_t k = 0; k < polys.size(); ++k) {
        const std::string pwhere =
            where + ".polylines[" + std::to_string(k) + "]";
        const json& poly = polys[k];
        if (!poly.is_array() || poly.size() < 2)
          parse_fail(pwhere, "expected an array of at least 2 points");
        std::vector<V2> points;
        for (const json& pt : poly) points.push_back(read_v2(pt, pwhere));
        b.polylines.push_back(std::move(points));
      }
    }
    s.library.push_back(std::move(b));
  }
}

void read_instances(const json& doc, Schematic& s) {
  if (!doc.contains("instances")) return;
  const json& insts = doc["instances"];
  if (!insts.is_array()) parse_fail("instances", "expected an array");
  for (std::size_t i = 0; i < insts.size(); ++i) {
    const std::string where = "instances[" + std::to_string(i) + "]";
    const json& ji = insts[i];
    BlockInstance inst;
    inst.block = read_string(require_key(ji, "block", where), where + ".block");
    inst.pipe = read_string(require_key(ji, "pipe", where), where + ".pipe");
    inst.t = read_number(require_key(ji, "t", where), where + ".t");
    const json& axis = require_key(ji, "plane_axis", where);
    if (!axis.is_number_integer() || !is_axis_index(axis.get<int>()))
      parse_fail(where + ".plane_axis",
                 "expected a signed axis index in {1,2,3,-1,-2,-3}");
    inst.plane_axis = static_cast<AxisIndex>(axis.get<int>());
    s.instances.push_back(std::move(inst));
  }
}

void read_offsets(const json& doc, Schematic& s) {
  if (!doc.contains("offsets")) return;
  const json& offs = doc["offsets"];
  if (!offs.is_object()) parse_fail("offsets", "expected an object");
  if (offs.contains("general")) {
    const json& gen = offs["general"];
    if (!gen.is_array()) parse_fail("offsets.general", "expected an array");
    for (std::size_t i = 0; i < gen.size(); ++i) {
      const std::string where = "offsets.general[" + std::to_string(i) + "]";
      GeneralOffset g;
      g.plane.n = read_v3(require_key(gen[i], "n", where), where + ".n");
      g.plane.c = read_number(require_key(gen[i], "c", where), where + ".c");
      g.displacement = read_v3(require_key(gen[i], "d", where), where + ".d");
      s.offsets.general.push_back(g);
    }
  }
  if (offs.contains("local")) {
    const json& loc = offs["local"];
    if (!loc.is_array()) parse_fail("offsets.local", "expected an array");
    for (std::size_t i = 0; i < loc.size(); ++i) {
      const std::string where = "offsets.local[" + std::to_string(i) + "]";
      LocalOffset l;
      const json& ids = require_key(loc[i], "pipes", where);
      if (!ids.is_array()) parse_fail(where + ".pipes", "expected an array");
      for (const json& id : ids)
        l.pipes.push_back(read_string(id, where + ".pipes"));
      l.displacement = read_v3(require_key(loc[i], "d", where), where + ".d");
      s.offsets.local.push_back(std::move(l));
    }
  }
}

void read_runs(const json& doc, Schematic& s) {
  if (!doc.contains("dimension_runs")) return;
  const json& runs = doc["dimension_runs"];
  if (!runs.is_array()) parse_fail("dimension_runs", "expected an array");
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::string where = "dimension_runs[" + std::to_string(i) + "]";
    const json& run = runs[i];
    if (!run.is_array() || run.empty())
      parse_fail(where, "expected a non-empty array of pipe ids");
    std::vector<std::string> ids;
    for (const json& id : run) ids.push_back(read_string(id, where));
    s.dimension_runs.push_back(std::move(ids));
  }
}

}  // namespace

Schematic parse_schematic(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::kParseError, "document: expected an object");

  Schematic s;
  const json& meta = require_key(doc, "meta", "document");
  s.anchor = read_v2(require_key(meta, "anchor", "meta"), "meta.anchor");
  s.scale_denominator = read_number(
      require_key(meta, "scale_denominator", "meta"), "meta.scale_denominator");
  if (meta.contains("projection"))
    s.projection = read_projection(meta["projection"], "meta.projection");

  read_pipes(doc, s);
  read_library(doc, s);
  read_instances(doc, s);
  read_offsets(doc, s);
  read_runs(doc, s);

  auto diagnostics = validate(s);
  if (!diagnostics.empty()) throw ValidationFailed(std::move(diagnostics));
  return s;
}

Schematic load_schematic(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorCode::kIoError, "cannot read '" + path + "'");
  return parse_schematic(buffer.str());
}

}  // namespace axokern
