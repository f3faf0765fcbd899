#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "axokern/document_io.hpp"
#include "axokern/render.hpp"

namespace {

using namespace axokern;

constexpr int kExitOk = 0;
constexpr int kExitIoOrParse = 1;
constexpr int kExitDiagnostics = 2;
constexpr int kExitDegenerateProjection = 3;

int exit_code_for(const KernelError& e) {
  switch (e.code()) {
    case ErrorCode::kParseError:
    case ErrorCode::kIoError:
      return kExitIoOrParse;
    case ErrorCode::kDegenerateProjection:
      return kExitDegenerateProjection;
    default:
      return kExitDiagnostics;
  }
}

void print_diagnostics(const ValidationFailed& vf) {
  for (const Diagnostic& d : vf.diagnostics()) std::cout << format(d) << "\n";
}

OffsetMode parse_mode(const std::string& mode) {
  if (mode == "general") return OffsetMode::kGeneralOnly;
  if (mode == "local") return OffsetMode::kLocalOnly;
  if (mode == "none") return OffsetMode::kNone;
  return OffsetMode::kAll;
}

std::string fmt3(Float v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(v));
  return buf;
}

std::string fmt(const V3& p) {
  return "(" + fmt3(p.x) + "," + fmt3(p.y) + "," + fmt3(p.z) + ")";
}

std::string fmt(const V2& p) {
  return "(" + fmt3(p.x) + "," + fmt3(p.y) + ")";
}

int run_render(const std::string& input, const std::string& output,
               const std::string& mode, const std::vector<double>& projection,
               double scale, double tol) {
  try {
    const Schematic s = load_schematic(input);
    RenderOptions opts;
    opts.mode = parse_mode(mode);
    if (!projection.empty()) {
      ProjectionOp op;
      op.shift = {0.0f, 0.0f};
      for (std::size_t i = 0; i < 6; ++i)
        op.m[i] = static_cast<Float>(projection[i]);
      opts.projection_override = op;
    }
    if (scale > 0.0) opts.scale_override = static_cast<Float>(scale);
    if (tol > 0.0) opts.tol = Tolerance{static_cast<Float>(tol)};
    emit_svg(render(s, opts), output);
    return kExitOk;
  } catch (const ValidationFailed& vf) {
    print_diagnostics(vf);
    return kExitDiagnostics;
  } catch (const KernelError& e) {
    std::cerr << "axokern: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "axokern: " << e.what() << "\n";
    return kExitIoOrParse;
  }
}

int run_validate(const std::string& input) {
  try {
    load_schematic(input);
    return kExitOk;
  } catch (const ValidationFailed& vf) {
    print_diagnostics(vf);
    return kExitDiagnostics;
  } catch (const KernelError& e) {
    std::cerr << "axokern: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "axokern: " << e.what() << "\n";
    return kExitIoOrParse;
  }
}

int run_dump(const std::string& input, const std::string& stage) {
  try {
    const Schematic s = load_schematic(input);
    for (const Pipe& pipe : s.pipes) {
      const auto segments = cut_segments(s, pipe);
      for (std::size_t i = 0; i < segments.size(); ++i) {
        const auto& [a, b] = segments[i];
        std::cout << "pipe " << pipe.id << " seg " << i << " " << stage << " ";
        if (stage == "rein") {
          std::cout << fmt(a) << " -> " << fmt(b) << "\n";
          continue;
        }
        const V3 va = to_revi(a, s.offsets, pipe.id);
        const V3 vb = to_revi(b, s.offsets, pipe.id);
        if (stage == "revi") {
          std::cout << fmt(va) << " -> " << fmt(vb) << "\n";
        } else {
          const V2 pa = revi_to_paper(va, s.projection, s.anchor,
                                      s.scale_denominator);
          const V2 pb = revi_to_paper(vb, s.projection, s.anchor,
                                      s.scale_denominator);
          std::cout << fmt(pa) << " -> " << fmt(pb) << "\n";
        }
      }
    }
    return kExitOk;
  } catch (const ValidationFailed& vf) {
    print_diagnostics(vf);
    return kExitDiagnostics;
  } catch (const KernelError& e) {
    std::cerr << "axokern: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "axokern: " << e.what() << "\n";
    return kExitIoOrParse;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"axokern - batch axonometric piping schematic renderer"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string mode = "all";
  std::string stage = "paper";
  std::vector<double> projection;
  double scale = 0.0;
  double tol = 0.0;

  CLI::App* render_cmd = app.add_subcommand("render", "render a schematic to SVG");
  render_cmd->add_option("input", input, "schematic document (JSON)")->required();
  render_cmd->add_option("-o,--output", output, "output SVG path")->required();
  render_cmd->add_option("--mode", mode, "offset mode")
      ->check(CLI::IsMember({"all", "general", "local", "none"}));
  render_cmd->add_option("--projection", projection,
                         "projection matrix override, 6 values row-major")
      ->delimiter(',')
      ->expected(6);
  render_cmd->add_option("--scale", scale, "scale denominator override (1:N)");
  render_cmd->add_option("--tol", tol, "coordinate tolerance, mm");

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a schematic document");
  validate_cmd->add_option("input", input, "schematic document (JSON)")->required();

  CLI::App* dump_cmd =
      app.add_subcommand("dump", "print pipe segment coordinates per stage");
  dump_cmd->add_option("input", input, "schematic document (JSON)")->required();
  dump_cmd->add_option("--stage", stage, "coordinate stage")
      ->check(CLI::IsMember({"rein", "revi", "paper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitIoOrParse;
  }

  if (render_cmd->parsed())
    return run_render(input, output, mode, projection, scale, tol);
  if (validate_cmd->parsed()) return run_validate(input);
  return run_dump(input, stage);
}
