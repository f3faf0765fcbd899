#include "axokern/schematic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace axokern {

namespace {

V3 point_on_pipe(const Pipe& pipe, const V3& u, double t) {
  return {static_cast<Float>(pipe.a.x + t * u.x),
          static_cast<Float>(pipe.a.y + t * u.y),
          static_cast<Float>(pipe.a.z + t * u.z)};
}

}  // namespace

const Pipe* Schematic::find_pipe(std::string_view id) const {
  for (const Pipe& p : pipes)
    if (p.id == id) return &p;
  return nullptr;
}

const Block* Schematic::find_block(std::string_view id) const {
  for (const Block& b : library)
    if (b.id == id) return &b;
  return nullptr;
}

V3 pipe_ort(const Pipe& pipe) { return direction_ort(pipe.a, pipe.b); }

V3 pipe_ort(const Schematic& s, std::size_t list_no) {
  if (list_no >= s.pipes.size())
    fail(ErrorCode::kUnknownPipe,
         "pipe_ort: list ordinal " + std::to_string(list_no) + " out of range");
  return pipe_ort(s.pipes[list_no]);
}

std::vector<AxisIndex> allowed_plane_axes(const V3& pipe_ort_v,
                                          Tolerance tol) {
  static constexpr AxisIndex kPreference[] = {AxisIndex::kPosZ,
                                              AxisIndex::kPosX,
                                              AxisIndex::kPosY};
  std::vector<AxisIndex> out;
  for (AxisIndex k : kPreference) {
    if (!collinear_scalar(axis_ort(k), pipe_ort_v, tol)) out.push_back(k);
  }
  return out;
}

PlacementOp build_placement(const Schematic& s, const BlockInstance& inst,
                            Tolerance tol) {
  const Pipe* pipe = s.find_pipe(inst.pipe);
  if (!pipe)
    fail(ErrorCode::kUnknownPipe,
         "build_placement: unknown pipe '" + inst.pipe + "'");
  const V3 u = pipe_ort(*pipe);
  const Float len = distance(pipe->a, pipe->b);
  if (!(inst.t >= 0.0f && inst.t <= len))
    fail(ErrorCode::kInvalidAttachment,
         "build_placement: t = " + std::to_string(inst.t) +
             " outside pipe '" + pipe->id + "' of length " +
             std::to_string(len));
  const auto allowed = allowed_plane_axes(u, tol);
  if (std::find(allowed.begin(), allowed.end(), inst.plane_axis) ==
      allowed.end())
    fail(ErrorCode::kInvalidOrientation,
         "build_placement: plane axis not allowed for pipe '" + pipe->id +
             "'");
  const V3 e = axis_ort(inst.plane_axis);
  // Gram-Schmidt: the block plane's second direction, orthogonal to the pipe.
  const Float along = dot(e, u);
  const V3 w = ort(e - along * u, tol);
  const Float n = s.scale_denominator;
  PlacementOp op;
  op.shift = point_on_pipe(*pipe, u, inst.t);
  op.m = from_columns(u * n, w * n);
  return op;
}

std::vector<std::pair<V3, V3>> cut_segments(const Schematic& s,
                                            const Pipe& pipe, Tolerance tol) {
  const V3 u = pipe_ort(pipe);
  const double len = distance(pipe.a, pipe.b);
  const double n = s.scale_denominator;

  struct Cut {
    double lo;
    double hi;
    const BlockInstance* inst;
  };
  std::vector<Cut> cuts;
  for (const BlockInstance& inst : s.instances) {
    if (inst.pipe != pipe.id) continue;
    const Block* block = s.find_block(inst.block);
    if (!block)
      fail(ErrorCode::kUnknownBlock,
           "cut_segments: unknown block '" + inst.block + "'");
    if (!block->cut) continue;
    double lo = inst.t + block->cut->lo * n;
    double hi = inst.t + block->cut->hi * n;
    if (hi - lo <= tol.eps) continue;  // empty cut removes nothing
    if (lo < -tol.eps || hi > len + tol.eps)
      fail(ErrorCode::kCutOutOfRange,
           "cut_segments: block '" + inst.block + "' cut extends beyond pipe '" +
               pipe.id + "'");
    cuts.push_back({std::max(lo, 0.0), std::min(hi, len), &inst});
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const Cut& a, const Cut& b) { return a.lo < b.lo; });

  // Overlap means the shared length exceeds tolerance; touching cuts pass.
  double max_hi = 0.0;
  const BlockInstance* max_inst = nullptr;
  for (const Cut& c : cuts) {
    if (max_inst && max_hi - c.lo > tol.eps)
      fail(ErrorCode::kOverlappingBlocks,
           "cut_segments: blocks '" + max_inst->block + "' and '" +
               c.inst->block + "' overlap on pipe '" + pipe.id + "'");
    if (!max_inst || c.hi > max_hi) {
      max_hi = c.hi;
      max_inst = c.inst;
    }
  }

  std::vector<std::pair<V3, V3>> out;
  double cursor = 0.0;
  for (const Cut& c : cuts) {
    if (c.lo - cursor > tol.eps)
      out.emplace_back(point_on_pipe(pipe, u, cursor),
                       point_on_pipe(pipe, u, c.lo));
    cursor = std::max(cursor, c.hi);
  }
  if (len - cursor > tol.eps)
    out.emplace_back(point_on_pipe(pipe, u, cursor),
                     point_on_pipe(pipe, u, len));
  return out;
}

std::vector<DimensionEntity> chain_dimensions(
    const Schematic& s, std::span<const std::string> run,
    const OffsetContext& ctx, Tolerance tol) {
  if (run.empty())
    fail(ErrorCode::kInvalidRun, "chain_dimensions: empty run");
  std::vector<const Pipe*> pipes;
  for (const std::string& id : run) {
    const Pipe* p = s.find_pipe(id);
    if (!p)
      fail(ErrorCode::kUnknownPipe,
           "chain_dimensions: unknown pipe '" + id + "'");
    pipes.push_back(p);
  }
  const V3 u0 = pipe_ort(*pipes.front());
  for (std::size_t i = 1; i < pipes.size(); ++i) {
    if (!v_eq(pipes[i - 1]->b, pipes[i]->a, tol))
      fail(ErrorCode::kInvalidRun,
           "chain_dimensions: pipes '" + pipes[i - 1]->id + "' and '" +
               pipes[i]->id + "' are not connected end-to-start");
    if (!collinear_scalar(u0, pipe_ort(*pipes[i]), kOrtTol))
      fail(ErrorCode::kInvalidRun,
           "chain_dimensions: pipe '" + pipes[i]->id +
               "' is not parallel to the run");
  }

  // Extension lines go along the preferred admissible axis, so they lie in a
  // valid block plane and along a coordinate axis at once.
  const V3 e = axis_ort(allowed_plane_axes(u0, kOrtTol).front());
  const Float n = s.scale_denominator;
  const Float offset = kDimLineOffsetPaperMm * n;
  const Float overshoot = kExtOvershootPaperMm * n;
  const Float gap = kTextGapPaperMm * n;

  std::vector<DimensionEntity> out;
  for (const Pipe* p : pipes) {
    const V3 p1 = to_revi(p->a, ctx, p->id, tol);
    const V3 p2 = to_revi(p->b, ctx, p->id, tol);
    DimensionEntity ent;
    ent.value = distance(p->a, p->b);  // true length, never the ReVi one
    ent.ext1 = {p1, p1 + e * (offset + overshoot)};
    ent.ext2 = {p2, p2 + e * (offset + overshoot)};
    ent.dim_line = {p1 + e * offset, p2 + e * offset};
    const V3 mid = {static_cast<Float>((ent.dim_line.first.x +
                                        static_cast<double>(ent.dim_line.second.x)) / 2.0),
                    static_cast<Float>((ent.dim_line.first.y +
                                        static_cast<double>(ent.dim_line.second.y)) / 2.0),
                    static_cast<Float>((ent.dim_line.first.z +
                                        static_cast<double>(ent.dim_line.second.z)) / 2.0)};
    ent.text_anchor = mid + e * gap;
    out.push_back(ent);
  }
  return out;
}

std::string format(const Diagnostic& d) {
  std::string out = d.severity == Severity::kError ? "error" : "warning";
  out += ' ';
  out += d.entity_id.empty() ? "-" : d.entity_id;
  out += ' ';
  out += to_string(d.code);
  out += ' ';
  out += d.message;
  return out;
}

namespace {

void check_pipes(const Schematic& s, Tolerance tol,
                 std::vector<Diagnostic>& out) {
  std::set<std::string> seen;
  for (const Pipe& p : s.pipes) {
    if (p.id.empty())
      out.push_back({Severity::kError, p.id, ErrorCode::kDuplicateId,
                     "pipe with empty id"});
    else if (!seen.insert(p.id).second)
      out.push_back({Severity::kError, p.id, ErrorCode::kDuplicateId,
                     "duplicate pipe id '" + p.id + "'"});
    if (distance(p.a, p.b) <= tol.eps)
      out.push_back({Severity::kError, p.id, ErrorCode::kDegenerateVector,
                     "pipe '" + p.id + "' has near-zero length"});
  }
}

void check_library(const Schematic& s, std::vector<Diagnostic>& out) {
  std::set<std::string> seen;
  for (const Block& b : s.library) {
    if (b.id.empty() || !seen.insert(b.id).second)
      out.push_back({Severity::kError, b.id, ErrorCode::kDuplicateId,
                     "duplicate or empty block id '" + b.id + "'"});
    if (b.cut && !(b.cut->lo <= 0.0f && 0.0f <= b.cut->hi))
      out.push_back({Severity::kError, b.id, ErrorCode::kInvalidCut,
                     "block '" + b.id +
                         "' cut interval does not contain the anchor"});
  }
}

void check_instances(const Schematic& s, std::vector<Diagnostic>& out) {
  for (std::size_t i = 0; i < s.instances.size(); ++i) {
    const BlockInstance& inst = s.instances[i];
    const std::string entity = "instances[" + std::to_string(i) + "]";
    if (!s.find_block(inst.block)) {
      out.push_back({Severity::kError, entity, ErrorCode::kUnknownBlock,
                     "instance references missing block '" + inst.block + "'"});
      continue;
    }
    const Pipe* pipe = s.find_pipe(inst.pipe);
    if (!pipe) {
      out.push_back({Severity::kError, entity, ErrorCode::kUnknownPipe,
                     "instance references missing pipe '" + inst.pipe + "'"});
      continue;
    }
    if (distance(pipe->a, pipe->b) <= kCoordTol.eps) continue;  // reported above
    try {
      build_placement(s, inst);
    } catch (const KernelError& e) {
      out.push_back({Severity::kError, entity, e.code(), e.what()});
    }
  }
}

void check_offsets(const Schematic& s, std::vector<Diagnostic>& out) {
  for (std::size_t i = 0; i < s.offsets.general.size(); ++i) {
    const GeneralOffset& g = s.offsets.general[i];
    const std::string entity = "offsets.general[" + std::to_string(i) + "]";
    if (!is_one(length(g.plane.n), kOrtTol))
      out.push_back({Severity::kError, entity, ErrorCode::kInvalidPlane,
                     "offset plane normal is not an ort"});
    else if (dot(g.plane.n, g.displacement) < -kCoordTol.eps)
      out.push_back({Severity::kError, entity, ErrorCode::kInvalidOffset,
                     "displacement points back through the offset plane; the "
                     "visible-space transform would not be invertible"});
  }
  for (std::size_t i = 0; i < s.offsets.local.size(); ++i) {
    const LocalOffset& l = s.offsets.local[i];
    const std::string entity = "offsets.local[" + std::to_string(i) + "]";
    if (l.pipes.empty())
      out.push_back({Severity::kError, entity, ErrorCode::kInvalidOffset,
                     "local offset names no pipes"});
    for (const std::string& id : l.pipes)
      if (!s.find_pipe(id))
        out.push_back({Severity::kError, entity, ErrorCode::kUnknownPipe,
                       "local offset references missing pipe '" + id + "'"});
  }
}

void check_projection(const Schematic& s, std::vector<Diagnostic>& out) {
  const V3 r0 = row(s.projection.m, 0);
  const V3 r1 = row(s.projection.m, 1);
  const Float span = length(cross(r0, r1));
  if (span <= kOrtTol.eps * length(r0) * length(r1))
    out.push_back({Severity::kError, "meta", ErrorCode::kDegenerateProjection,
                   "projection matrix does not have rank 2"});
}

void check_runs(const Schematic& s, Tolerance tol,
                std::vector<Diagnostic>& out) {
  for (std::size_t i = 0; i < s.dimension_runs.size(); ++i) {
    const std::string entity = "dimension_runs[" + std::to_string(i) + "]";
    try {
      chain_dimensions(s, s.dimension_runs[i], s.offsets, tol);
    } catch (const KernelError& e) {
      out.push_back({Severity::kError, entity, e.code(), e.what()});
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const Schematic& s, Tolerance tol) {
  std::vector<Diagnostic> out;
  if (!(s.scale_denominator > 0.0f))
    out.push_back({Severity::kError, "meta", ErrorCode::kInvalidScale,
                   "scale denominator must be positive"});
  check_projection(s, out);
  check_pipes(s, tol, out);
  check_library(s, out);
  check_instances(s, out);
  check_offsets(s, out);

  // The cut and dimension checks assume resolvable, non-degenerate geometry.
  if (!out.empty()) return out;

  for (const Pipe& p : s.pipes) {
    try {
      cut_segments(s, p, tol);
    } catch (const KernelError& e) {
      out.push_back({Severity::kError, p.id, e.code(), e.what()});
    }
  }
  check_runs(s, tol, out);
  return out;
}

ValidationFailed::ValidationFailed(std::vector<Diagnostic> diagnostics)
    : std::runtime_error("schematic validation failed (" +
                         std::to_string(diagnostics.size()) + " diagnostics)"),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace axokern
