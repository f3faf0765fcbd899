#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axokern/schematic.hpp"

namespace axokern {

struct RenderOptions {
  std::optional<ProjectionOp> projection_override;
  std::optional<Float> scale_override;  // replaces the document denominator
  OffsetMode mode = OffsetMode::kAll;
  Tolerance tol = kCoordTol;
  // Styling, mm Paper.
  Float pipe_stroke = 0.5f;
  Float block_stroke = 0.35f;
  Float dimension_stroke = 0.25f;
  Float font_size = 3.5f;
};

struct Segment2 {
  V2 a;
  V2 b;

  friend bool operator==(const Segment2&, const Segment2&) = default;
};

struct TextItem {
  V2 anchor;
  std::string text;

  friend bool operator==(const TextItem&, const TextItem&) = default;
};

// 2D primitives in Paper mm, grouped in draw order: pipes, blocks,
// dimensions, each in document order.
struct RenderedScene {
  std::vector<Segment2> pipe_segments;
  std::vector<std::vector<V2>> block_polylines;
  std::vector<Segment2> dimension_segments;
  std::vector<TextItem> dimension_texts;
  Float pipe_stroke = 0.5f;
  Float block_stroke = 0.35f;
  Float dimension_stroke = 0.25f;
  Float font_size = 3.5f;
};

// Validates, applies offsets per opts.mode, projects, and assembles the
// scene. Raises ValidationFailed on diagnostics and
// KernelError(kDegenerateProjection) when a block plane collapses under the
// chosen projection.
RenderedScene render(const Schematic& s, const RenderOptions& opts = {});

// Deterministic SVG 1.1 text: 1 user unit = 1 Paper mm, a single top-level
// Y-flip transform, coordinates fixed to 3 decimals.
std::string svg_string(const RenderedScene& scene);

void emit_svg(const RenderedScene& scene, const std::string& path);

}  // namespace axokern
