#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "axokern/axes_offsets.hpp"
#include "axokern/errors.hpp"
#include "axokern/linear_maps.hpp"
#include "axokern/numeric.hpp"

namespace axokern {

// Directed pipe segment a -> b in ReIn, mm.
struct Pipe {
  std::string id;
  V3 a;
  V3 b;
};

// Interval along the Li X axis, mm Paper. Contains 0 (the block anchor).
struct CutInterval {
  Float lo;
  Float hi;
};

// Library symbol: 2D geometry in Li (mm Paper, origin = anchor point) and the
// interval it removes from the pipe it sits on.
struct Block {
  std::string id;
  std::vector<std::vector<V2>> polylines;
  std::optional<CutInterval> cut;
};

// A block attached to a pipe. t is the anchor coordinate along the pipe axis
// from endpoint a, mm ReIn. plane_axis names the ReIn axis whose ort, together
// with the pipe ort, spans the block plane.
struct BlockInstance {
  std::string block;
  std::string pipe;
  Float t = 0.0f;
  AxisIndex plane_axis = AxisIndex::kPosZ;
};

struct Schematic {
  V2 anchor;                        // Paper mm
  Float scale_denominator = 1.0f;   // drawing scale 1:N
  ProjectionOp projection = default_isometric(1.0f);
  std::vector<Pipe> pipes;
  std::vector<Block> library;
  std::vector<BlockInstance> instances;
  OffsetContext offsets;
  std::vector<std::vector<std::string>> dimension_runs;

  const Pipe* find_pipe(std::string_view id) const;
  const Block* find_block(std::string_view id) const;
};

V3 pipe_ort(const Pipe& pipe);
V3 pipe_ort(const Schematic& s, std::size_t list_no);

// Positive axes not collinear with the pipe ort, in preference order
// +Z, +X, +Y. Never empty: no vector is collinear with all three axes.
std::vector<AxisIndex> allowed_plane_axes(const V3& pipe_ort_v,
                                          Tolerance tol = kOrtTol);

// Li -> ReIn placement for a block instance. Column 1 is the pipe ort and
// column 2 the chosen axis ort orthogonalized against it, both times the
// scale denominator (Li is in Paper mm). The Li X axis lands on the pipe.
PlacementOp build_placement(const Schematic& s, const BlockInstance& inst,
                            Tolerance tol = kOrtTol);

// Drawn sub-segments of the pipe: its parameter range minus the cut
// intervals of the instances sitting on it, as ReIn endpoint pairs.
std::vector<std::pair<V3, V3>> cut_segments(const Schematic& s,
                                            const Pipe& pipe,
                                            Tolerance tol = kCoordTol);

// Chain dimension for one pipe of a run. The value is the true ReIn length;
// the geometry lives in ReVi where offsets may have displaced the endpoints.
struct DimensionEntity {
  Float value = 0.0f;     // mm ReIn
  std::pair<V3, V3> ext1;
  std::pair<V3, V3> ext2;
  std::pair<V3, V3> dim_line;
  V3 text_anchor;
};

// Extension lines run along the first allowed plane axis. Styling constants,
// mm Paper (scaled into Natura by the schematic's denominator):
inline constexpr Float kDimLineOffsetPaperMm = 12.0f;
inline constexpr Float kExtOvershootPaperMm = 10.0f;
inline constexpr Float kTextGapPaperMm = 2.0f;

std::vector<DimensionEntity> chain_dimensions(
    const Schematic& s, std::span<const std::string> run,
    const OffsetContext& ctx, Tolerance tol = kCoordTol);

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string entity_id;
  ErrorCode code = ErrorCode::kInvalidScale;
  std::string message;
};

std::string format(const Diagnostic& d);

// Empty iff all invariants and cross-references hold and cut_segments
// succeeds for every pipe.
std::vector<Diagnostic> validate(const Schematic& s,
                                 Tolerance tol = kCoordTol);

class ValidationFailed : public std::runtime_error {
 public:
  explicit ValidationFailed(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace axokern
