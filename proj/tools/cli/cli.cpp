#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "nmapgen/color.hpp"
#include "nmapgen/error.hpp"
#include "nmapgen/normal_codec.hpp"
#include "nmapgen/png_io.hpp"
#include "nmapgen/relight.hpp"
#include "nmapgen/techniques.hpp"
#include "preview_service.hpp"

namespace nmapgen::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string in;
  std::string out;
  std::string top, bottom, left, right;
  std::string normals;
  std::string debug_stages;
  std::string mode = "difference";
  std::string light = "upper-right";
  std::string light_color = "1,1,1";
  std::string attenuation = "1,0,0";
  double ambient = LightConfig{}.ambient;
  int port = preview::kDefaultPort;
  std::string host = "127.0.0.1";
  std::string assets = "web";
  bool open_browser = false;
  // Raw values of the shared technique flags, keyed like ParamSpec::key.
  std::vector<std::pair<const ParamSpec*, double>> params;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string flag_name(std::string_view key) {
  std::string name = "--" + std::string(key);
  for (char& c : name) {
    if (c == '_') c = '-';
  }
  if (key == "gaussian_sigma") name += ",--sigma";  // short alias
  return name;
}

Vec3 parse_triple(const std::string& text, const char* flag) {
  std::array<double, 3> v{};
  std::istringstream in(text);
  for (int i = 0; i < 3; ++i) {
    char sep = ',';
    if (i > 0 && !(in >> sep)) throw UsageError(std::string(flag) + " expects x,y,z");
    if (sep != ',' || !(in >> v[i])) throw UsageError(std::string(flag) + " expects x,y,z");
  }
  in >> std::ws;
  if (!in.eof()) throw UsageError(std::string(flag) + " expects x,y,z");
  return {v[0], v[1], v[2]};
}

// Adds the technique flags that apply to `m`, with defaults shown in --help.
void add_param_flags(CLI::App* sub, Method m, Options& opts) {
  const TechniqueParams defaults;
  for (const ParamSpec& spec : param_specs()) {
    if (!spec.applies_to(m)) continue;
    auto* opt = sub->add_option_function<double>(
        flag_name(spec.key),
        [&opts, &spec](double v) { opts.params.emplace_back(&spec, v); },
        std::string(spec.help));
    std::ostringstream def;
    def << spec.get(defaults, m);
    opt->default_str(def.str());
    opt->type_name(spec.integral ? "INT" : "FLOAT");
  }
}

TechniqueParams resolve_params(const Options& opts) {
  TechniqueParams params;
  for (const auto& [spec, value] : opts.params) {
    try {
      set_param(params, *spec, value);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  const auto mode = parse_merge_mode(opts.mode);
  if (!mode) throw UsageError("--mode must be difference or overlay");
  params.four_angle.merge_mode = *mode;
  return params;
}

void write_bevel_stages(const BevelStages& s, const fs::path& dir) {
  fs::create_directories(dir);
  save_image(mask_to_image(s.silhouette), dir / "stage0.png");
  save_image(mask_to_image(s.edges), dir / "stage1.png");
  save_image(scalar_to_image(s.external_distance, true), dir / "stage2.png");
  save_image(scalar_to_image(s.internal_distance, true), dir / "stage3.png");
  save_image(scalar_to_image(s.merged_height, false), dir / "stage4.png");
  save_image(scalar_to_image(s.blurred_height, false), dir / "stage5.png");
  save_image(encode_normals(s.normals), dir / "stage6.png");
}

void run_generate(Method m, const Options& opts) {
  const TechniqueParams params = resolve_params(opts);
  std::vector<RasterImage> inputs;
  if (m == Method::kFourAngle) {
    for (const std::string* p : {&opts.top, &opts.bottom, &opts.left, &opts.right}) {
      inputs.push_back(load_image(*p));
    }
  } else {
    inputs.push_back(load_image(opts.in));
  }

  if (m == Method::kBevel && !opts.debug_stages.empty()) {
    validate(m, params);
    const BevelStages stages = bevel_stages(inputs[0], params.bevel);
    write_bevel_stages(stages, opts.debug_stages);
    save_image(encode_normals(stages.normals), opts.out);
    return;
  }
  save_image(encode_normals(generate_normals(m, inputs, params)), opts.out);
}

void run_relight(const Options& opts) {
  const RasterImage sprite = load_image(opts.in);
  const RasterImage normal_map = load_image(opts.normals);

  LightConfig light = standard_validation_light(sprite.width(), sprite.height());
  if (opts.light != "upper-right") light.position = parse_triple(opts.light, "--light");
  light.ambient = opts.ambient;
  light.color = parse_triple(opts.light_color, "--light-color");
  const Vec3 att = parse_triple(opts.attenuation, "--attenuation");
  light.attenuation = {att.x, att.y, att.z};

  save_image(shade(sprite, decode_normals(normal_map), light), opts.out);
}

void run_preview(const Options& opts, std::ostream& out) {
  preview::ServeOptions serve_opts;
  serve_opts.host = opts.host;
  serve_opts.port = opts.port;
  serve_opts.asset_dir = opts.assets;
  preview::PreviewServer server(serve_opts);
  const int port = server.bind();
  const std::string url = "http://" + opts.host + ":" + std::to_string(port) + "/";
  out << "preview service listening on " << url << std::endl;
  if (opts.open_browser) {
    const std::string command = "xdg-open " + url + " >/dev/null 2>&1 &";
    if (std::system(command.c_str()) != 0) out << "could not open a browser" << std::endl;
  }
  server.run();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Normal map generation for pixel-art sprites", "nmapgen"};
  app.require_subcommand(1, 1);

  std::array<CLI::App*, 4> method_cmds{};
  for (Method m : kAllMethods) {
    const std::string name(to_string(m));
    std::string description;
    switch (m) {
      case Method::kSobelColor:
        description = "Sobel normals from the grayscale of a color sprite";
        break;
      case Method::kSobelHeight:
        description = "Sobel normals from a grayscale height map";
        break;
      case Method::kBevel:
        description = "Bevel normals from silhouette and internal-edge distance fields";
        break;
      case Method::kFourAngle:
        description = "Normals from four shadings lit from top, bottom, left and right";
        break;
    }
    CLI::App* sub = app.add_subcommand(name, description);
    if (m == Method::kFourAngle) {
      sub->add_option("--top", opts.top, "sprite lit from above")->required();
      sub->add_option("--bottom", opts.bottom, "sprite lit from below")->required();
      sub->add_option("--left", opts.left, "sprite lit from the left")->required();
      sub->add_option("--right", opts.right, "sprite lit from the right")->required();
      sub->add_option("--mode", opts.mode, "merge mode")
          ->check(CLI::IsMember({"difference", "overlay"}))
          ->capture_default_str();
    } else {
      sub->add_option("--in", opts.in, "input PNG")->required();
    }
    sub->add_option("--out", opts.out, "output normal map PNG")->required();
    if (m == Method::kBevel) {
      sub->add_option("--debug-stages", opts.debug_stages,
                      "write stage0..stage6 PNGs (silhouette, edges, external distance, internal "
                      "distance, merged height, blurred height, normal map) to DIR");
    }
    add_param_flags(sub, m, opts);
    method_cmds[static_cast<std::size_t>(m)] = sub;
  }

  CLI::App* relight = app.add_subcommand("relight", "Shade a sprite with its normal map");
  relight->add_option("--in", opts.in, "color sprite PNG")->required();
  relight->add_option("--normals", opts.normals, "normal map PNG")->required();
  relight->add_option("--out", opts.out, "shaded output PNG")->required();
  relight->add_option("--light", opts.light, "upper-right or x,y,z in pixels (y down)")
      ->capture_default_str();
  relight->add_option("--ambient", opts.ambient, "ambient term")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  relight->add_option("--light-color", opts.light_color, "r,g,b in [0,1]")->capture_default_str();
  relight->add_option("--attenuation", opts.attenuation, "kc,kl,kq")->capture_default_str();

  CLI::App* preview = app.add_subcommand("preview", "Serve the interactive previewer");
  preview->add_option("--port", opts.port, "TCP port (0 = any free port)")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  preview->add_option("--host", opts.host, "bind address")->capture_default_str();
  preview->add_option("--assets", opts.assets, "directory holding the web UI")
      ->capture_default_str();
  preview->add_flag("--open", opts.open_browser, "open the UI in a browser");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (Method m : kAllMethods) {
      if (method_cmds[static_cast<std::size_t>(m)]->parsed()) run_generate(m, opts);
    }
    if (relight->parsed()) run_relight(opts);
    if (preview->parsed()) run_preview(opts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitProcessingError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitProcessingError;
  }
  return kExitOk;
}

}  // namespace nmapgen::cli
