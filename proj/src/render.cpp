#include "axokern/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>

namespace axokern {

namespace {

std::string fmt3(Float v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(v));
  if (std::strcmp(buf, "-0.000") == 0) return "0.000";
  return buf;
}

// Dimension text: millimetres with trailing zeros trimmed.
std::string format_value(Float v) {
  std::string s = fmt3(v);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

V2 block_point_to_paper(const TransitionOp& li_to_projected, const V2& q,
                        const V2& anchor, Float n) {
  const V2 projected = li_to_projected.apply(q);
  return {static_cast<Float>(projected.x / static_cast<double>(n) + anchor.x),
          static_cast<Float>(projected.y / static_cast<double>(n) + anchor.y)};
}

struct Bounds {
  Float min_x = std::numeric_limits<Float>::max();
  Float min_y = std::numeric_limits<Float>::max();
  Float max_x = std::numeric_limits<Float>::lowest();
  Float max_y = std::numeric_limits<Float>::lowest();
  bool any = false;

  void add(const V2& p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
    any = true;
  }
};

Bounds scene_bounds(const RenderedScene& scene) {
  Bounds b;
  for (const Segment2& s : scene.pipe_segments) {
    b.add(s.a);
    b.add(s.b);
  }
  for (const auto& poly : scene.block_polylines)
    for (const V2& p : poly) b.add(p);
  for (const Segment2& s : scene.dimension_segments) {
    b.add(s.a);
    b.add(s.b);
  }
  for (const TextItem& t : scene.dimension_texts) b.add(t.anchor);
  if (!b.any) b = {0.0f, 0.0f, 1.0f, 1.0f, true};
  return b;
}

void append_line(std::string& out, const Segment2& s) {
  out += "      <line x1=\"" + fmt3(s.a.x) + "\" y1=\"" + fmt3(s.a.y) +
         "\" x2=\"" + fmt3(s.b.x) + "\" y2=\"" + fmt3(s.b.y) + "\"/>\n";
}

}  // namespace

RenderedScene render(const Schematic& s, const RenderOptions& opts) {
  Schematic eff = s;
  if (opts.projection_override) eff.projection = *opts.projection_override;
  if (opts.scale_override) eff.scale_denominator = *opts.scale_override;
  eff.offsets.mode = opts.mode;

  auto diagnostics = validate(eff, opts.tol);
  if (!diagnostics.empty()) throw ValidationFailed(std::move(diagnostics));

  const Tolerance tol = opts.tol;
  const Float n = eff.scale_denominator;

  RenderedScene scene;
  scene.pipe_stroke = opts.pipe_stroke;
  scene.block_stroke = opts.block_stroke;
  scene.dimension_stroke = opts.dimension_stroke;
  scene.font_size = opts.font_size;

  for (const Pipe& pipe : eff.pipes) {
    for (const auto& [a, b] : cut_segments(eff, pipe, tol)) {
      scene.pipe_segments.push_back(
          {revi_to_paper(to_revi(a, eff.offsets, pipe.id, tol), eff.projection,
                         eff.anchor, n),
           revi_to_paper(to_revi(b, eff.offsets, pipe.id, tol), eff.projection,
                         eff.anchor, n)});
    }
  }

  for (const BlockInstance& inst : eff.instances) {
    PlacementOp placement = build_placement(eff, inst);
    if (plane_collapses(eff.projection.m, column(placement.m, 0),
                        column(placement.m, 1), kOrtTol))
      fail(ErrorCode::kDegenerateProjection,
           "block '" + inst.block + "' on pipe '" + inst.pipe +
               "': block plane collapses under the projection");
    // The block rides its pipe: the attachment point takes the pipe's
    // displacement, the symbol stays rigid around it.
    placement.shift = to_revi(placement.shift, eff.offsets, inst.pipe, tol);
    const TransitionOp li_to_projected = compose(eff.projection, placement);
    const Block* block = eff.find_block(inst.block);
    for (const auto& poly : block->polylines) {
      std::vector<V2> mapped;
      mapped.reserve(poly.size());
      for (const V2& q : poly)
        mapped.push_back(block_point_to_paper(li_to_projected, q, eff.anchor, n));
      scene.block_polylines.push_back(std::move(mapped));
    }
  }

  for (const auto& run : eff.dimension_runs) {
    for (const DimensionEntity& ent :
         chain_dimensions(eff, run, eff.offsets, tol)) {
      const auto project = [&](const V3& p) {
        return revi_to_paper(p, eff.projection, eff.anchor, n);
      };
      scene.dimension_segments.push_back(
          {project(ent.ext1.first), project(ent.ext1.second)});
      scene.dimension_segments.push_back(
          {project(ent.ext2.first), project(ent.ext2.second)});
      scene.dimension_segments.push_back(
          {project(ent.dim_line.first), project(ent.dim_line.second)});
      scene.dimension_texts.push_back(
          {project(ent.text_anchor), format_value(ent.value)});
    }
  }
  return scene;
}

std::string svg_string(const RenderedScene& scene) {
  const Bounds b = scene_bounds(scene);
  const Float margin = 10.0f;
  const Float view_x = b.min_x - margin;
  const Float view_y = -b.max_y - margin;  // Y flip turns [min,max] into [-max,-min]
  const Float view_w = b.max_x - b.min_x + 2.0f * margin;
  const Float view_h = b.max_y - b.min_y + 2.0f * margin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt3(view_w) + "mm\" height=\"" + fmt3(view_h) + "mm\" viewBox=\"" +
         fmt3(view_x) + " " + fmt3(view_y) + " " + fmt3(view_w) + " " +
         fmt3(view_h) + "\">\n";
  // One flip for the whole drawing; every coordinate below is a Paper mm
  // value. Text elements counter-flip locally to stay upright.
  out += "  <g transform=\"scale(1 -1)\" fill=\"none\" stroke=\"#000000\" "
         "stroke-linecap=\"round\">\n";

  out += "    <g class=\"pipes\" stroke-width=\"" + fmt3(scene.pipe_stroke) +
         "\">\n";
  for (const Segment2& s : scene.pipe_segments) append_line(out, s);
  out += "    </g>\n";

  out += "    <g class=\"blocks\" stroke-width=\"" + fmt3(scene.block_stroke) +
         "\">\n";
  for (const auto& poly : scene.block_polylines) {
    out += "      <polyline points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) out += ' ';
      out += fmt3(poly[i].x) + "," + fmt3(poly[i].y);
    }
    out += "\"/>\n";
  }
  out += "    </g>\n";

  out += "    <g class=\"dimensions\" stroke-width=\"" +
         fmt3(scene.dimension_stroke) + "\">\n";
  for (const Segment2& s : scene.dimension_segments) append_line(out, s);
  for (const TextItem& t : scene.dimension_texts) {
    out += "      <text transform=\"translate(" + fmt3(t.anchor.x) + " " +
           fmt3(t.anchor.y) + ") scale(1 -1)\" font-size=\"" +
           fmt3(scene.font_size) +
           "\" font-family=\"sans-serif\" text-anchor=\"middle\" "
           "fill=\"#000000\" stroke=\"none\">" +
           t.text + "</text>\n";
  }
  out += "    </g>\n";

  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

void emit_svg(const RenderedScene& scene, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  const std::string text = svg_string(scene);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail(ErrorCode::kIoError, "cannot write '" + path + "'");
}

}  // namespace axokern
