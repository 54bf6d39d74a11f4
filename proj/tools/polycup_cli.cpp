// Command-line front end: validate, derivative, wedge, betti, check.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polycup/polycup.hpp"

namespace {

using namespace polycup;

enum Exit : int {
  kOk = 0,
  kPropertyViolated = 1,
  kUsage = 2,
  kValidation = 3,
  kDomain = 4,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedHeader:
    case ErrorKind::CountMismatch:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::UnparseableNumber:
    case ErrorKind::UnknownProperty:
    case ErrorKind::UnknownProfile:
      return kUsage;
    case ErrorKind::DegenerateFace:
    case ErrorKind::VertexOutOfRange:
    case ErrorKind::NotAPseudomanifold:
    case ErrorKind::Nonorientable:
    case ErrorKind::IncoherentOrientation:
      return kValidation;
    default:
      return kDomain;
  }
}

struct FileError {
  std::string path;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError{path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::optional<double> tol;
  std::string profile;
  bool orient = false;
  std::string format;
  std::string output;
};

RawMesh load_mesh(const std::string& path, const std::string& format) {
  std::string fmt = format;
  if (fmt.empty()) fmt = path.size() >= 4 && path.substr(path.size() - 4) == ".obj" ? "obj" : "off";
  const auto text = slurp(path);
  return fmt == "obj" ? parse_obj(text) : parse_off(text);
}

PolygonalComplex load_complex(const std::string& path, const Options& opt) {
  BuildOptions build;
  build.orient = opt.orient;
  return complex_from_mesh(load_mesh(path, opt.format), build);
}

void emit(const std::string& text, const Options& opt) {
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete exterior calculus on polygonal surfaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Mesh format (default: by extension)")
        ->check(CLI::IsMember({"off", "obj"}));
    sub->add_flag("--orient", opt.orient, "Coherently re-orient faces before use");
    sub->add_option("-o,--output", opt.output, "Write output to a file instead of stdout");
  };

  std::string mesh_path, form_a_path, form_b_path, property;

  auto* validate = app.add_subcommand("validate", "Build and validate a mesh");
  validate->add_option("mesh", mesh_path)->required();
  add_common(validate);

  auto* derivative = app.add_subcommand("derivative", "Exterior derivative of a form");
  derivative->add_option("mesh", mesh_path)->required();
  derivative->add_option("form", form_a_path)->required();
  add_common(derivative);

  auto* wedge = app.add_subcommand("wedge", "Cup product of two forms");
  wedge->add_option("mesh", mesh_path)->required();
  wedge->add_option("form_a", form_a_path)->required();
  wedge->add_option("form_b", form_b_path)->required();
  add_common(wedge);

  auto* betti = app.add_subcommand("betti", "Betti numbers over the reals");
  betti->add_option("mesh", mesh_path)->required();
  add_common(betti);

  auto* check = app.add_subcommand("check", "Check an identity on generated instances");
  check->add_option("property", property)->required();
  check->add_option("--seed", opt.seed, "Random seed (default 1)");
  check->add_option("--trials", opt.trials, "Number of trials (default 100)")->check(CLI::PositiveNumber);
  check->add_option("--tol", opt.tol, "Override the pass tolerance");
  check->add_option("--profile", opt.profile, "Mesh profile: triangles|quads|mixed|sphere|torus|disk");
  check->add_option("-o,--output", opt.output, "Write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      const auto c = load_complex(mesh_path, opt);
      emit("V=" + std::to_string(c.vertex_count()) + " E=" + std::to_string(c.edge_count()) +
               " F=" + std::to_string(c.face_count()) + "\nboundary=" +
               (c.has_boundary() ? "true" : "false") + "\norientable=true\n",
           opt);
      return kOk;
    }
    if (*derivative) {
      const auto c = load_complex(mesh_path, opt);
      const auto a = read_form(slurp(form_a_path), c);
      if (a.degree() == 2)
        std::cerr << "warning: derivative of a 2-form is the empty 3-form\n";
      emit(write_form(exterior_derivative(c, a)), opt);
      return kOk;
    }
    if (*wedge) {
      const auto c = load_complex(mesh_path, opt);
      const auto a = read_form(slurp(form_a_path), c);
      const auto b = read_form(slurp(form_b_path), c);
      emit(write_form(cup(c, a, b)), opt);
      return kOk;
    }
    if (*betti) {
      const auto c = load_complex(mesh_path, opt);
      const auto r = betti_numbers(c);
      emit("V=" + std::to_string(r.vertices) + " E=" + std::to_string(r.edges) +
               " F=" + std::to_string(r.faces) + "\nrank_d0=" + std::to_string(r.rank_d0) +
               "\nrank_d1=" + std::to_string(r.rank_d1) + "\nb0=" + std::to_string(r.betti[0]) +
               " b1=" + std::to_string(r.betti[1]) + " b2=" + std::to_string(r.betti[2]) +
               "\neuler=" + std::to_string(r.euler) + "\n",
           opt);
      return kOk;
    }
    if (*check) {
      std::optional<Profile> profile;
      if (!opt.profile.empty()) profile = parse_profile(opt.profile);
      auto report = check_property(property, opt.trials, opt.seed, profile);
      if (opt.tol && !report.counterexample_mode) {
        report.tolerance = *opt.tol;
        report.holds = report.max_deviation <= *opt.tol;
      }
      emit(to_text(report), opt);
      return report.holds ? kOk : kPropertyViolated;
    }
  } catch (const FileError& e) {
    std::cerr << "error: cannot read '" << e.path << "'\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}
