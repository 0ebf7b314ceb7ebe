#include "preview_service.hpp"

#include <httplib.h>

#include <atomic>
#include <json.hpp>
#include <string>
#include <vector>

#include "base64.hpp"
#include "nmapgen/error.hpp"
#include "nmapgen/normal_codec.hpp"
#include "nmapgen/png_io.hpp"
#include "nmapgen/relight.hpp"
#include "nmapgen/techniques.hpp"

namespace nmapgen::preview {
namespace {

using json = nlohmann::json;

// Raised for request-shape problems; carries the HTTP status.
struct RequestError {
  int status;
  std::string message;
};

[[noreturn]] void reject(std::string message, int status = 400) {
  throw RequestError{status, std::move(message)};
}

Response error_response(int status, std::string_view message) {
  return {status, json{{"error", message}}.dump()};
}

json parse_body(std::string_view body) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) reject("request body is not valid JSON");
  if (!doc.is_object()) reject("request body must be a JSON object");
  return doc;
}

RasterImage decode_image_field(const json& value, std::string_view field) {
  if (!value.is_string()) reject(std::string(field) + " must be a base64 PNG string");
  const auto bytes = base64_decode(value.get_ref<const std::string&>());
  if (!bytes) reject(std::string(field) + " is not valid base64");
  const ImageSize size = peek_png_size(*bytes);
  if (size.width > kMaxImageSide || size.height > kMaxImageSide) {
    reject(std::string(field) + " is " + std::to_string(size.width) + "x" +
               std::to_string(size.height) + "; the limit is " + std::to_string(kMaxImageSide) +
               "x" + std::to_string(kMaxImageSide),
           413);
  }
  return decode_png(*bytes);
}

double number_field(const json& obj, const char* key, std::optional<double> fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (!fallback) reject(std::string("light.") + key + " is required");
    return *fallback;
  }
  if (!it->is_number()) reject(std::string("light.") + key + " must be a number");
  return it->get<double>();
}

TechniqueParams parse_params(Method method, const json& params) {
  TechniqueParams out;
  if (params.is_null()) return out;
  if (!params.is_object()) reject("params must be an object");
  for (const auto& [key, value] : params.items()) {
    if (key == "mode" && method == Method::kFourAngle) {
      if (value.is_string()) {
        const auto mode = parse_merge_mode(value.get_ref<const std::string&>());
        if (!mode) reject("mode must be \"difference\" or \"overlay\"");
        out.four_angle.merge_mode = *mode;
      } else if (value.is_number_integer() && (value == 0 || value == 1)) {
        out.four_angle.merge_mode = value == 0 ? MergeMode::kDifference : MergeMode::kOverlay;
      } else {
        reject("mode must be \"difference\" or \"overlay\"");
      }
      continue;
    }
    const ParamSpec* spec = find_param(key);
    if (spec == nullptr || !spec->applies_to(method)) {
      reject("unknown parameter for " + std::string(to_string(method)) + ": " + key);
    }
    if (!value.is_number()) reject("parameter " + key + " must be a number");
    set_param(out, *spec, value.get<double>());
  }
  return out;
}

template <typename Handler>
Response guarded(Handler&& handler) {
  try {
    return handler();
  } catch (const RequestError& e) {
    return error_response(e.status, e.message);
  } catch (const Error& e) {
    return error_response(400, e.what());
  } catch (const json::exception& e) {
    return error_response(400, e.what());
  }
}

json png_field(const RasterImage& img) { return base64_encode(encode_png(img)); }

constexpr std::string_view kFallbackPage = R"html(<!doctype html>
<html><head><meta charset="utf-8"><title>nmapgen preview</title></head>
<body>
<h1>nmapgen preview service</h1>
<p>No UI assets were found. Build the web UI and pass its directory with
<code>nmapgen preview --assets DIR</code>.</p>
<ul>
<li><code>GET /api/params</code></li>
<li><code>POST /api/generate</code></li>
<li><code>POST /api/relight</code></li>
</ul>
</body></html>
)html";

}  // namespace

Response handle_generate(std::string_view body) {
  return guarded([&] {
    const json doc = parse_body(body);
    const auto method_it = doc.find("method");
    if (method_it == doc.end() || !method_it->is_string()) reject("method is required");
    const auto method = parse_method(method_it->get_ref<const std::string&>());
    if (!method) reject("unknown method: " + method_it->get<std::string>());

    const auto images_it = doc.find("images");
    if (images_it == doc.end() || !images_it->is_array()) reject("images must be an array");
    if (static_cast<int>(images_it->size()) != input_count(*method)) {
      reject(std::string(to_string(*method)) + " expects " +
             std::to_string(input_count(*method)) + " image(s), got " +
             std::to_string(images_it->size()));
    }
    const auto params_it = doc.find("params");
    const TechniqueParams params =
        parse_params(*method, params_it == doc.end() ? json() : *params_it);

    std::vector<RasterImage> images;
    for (std::size_t i = 0; i < images_it->size(); ++i) {
      images.push_back(decode_image_field((*images_it)[i], "images[" + std::to_string(i) + "]"));
    }
    const NormalField normals = generate_normals(*method, images, params);
    return Response{200, json{{"normal_map", png_field(encode_normals(normals))}}.dump()};
  });
}

Response handle_relight(std::string_view body) {
  return guarded([&] {
    const json doc = parse_body(body);
    if (!doc.contains("sprite")) reject("sprite is required");
    if (!doc.contains("normal_map")) reject("normal_map is required");
    const auto light_it = doc.find("light");
    if (light_it == doc.end() || !light_it->is_object()) reject("light must be an object");

    const RasterImage sprite = decode_image_field(doc["sprite"], "sprite");
    const RasterImage normal_map = decode_image_field(doc["normal_map"], "normal_map");

    LightConfig light;
    light.position = {number_field(*light_it, "x", std::nullopt),
                      number_field(*light_it, "y", std::nullopt),
                      number_field(*light_it, "z", std::nullopt)};
    light.ambient = number_field(*light_it, "ambient", LightConfig{}.ambient);

    const RasterImage frame = shade(sprite, decode_normals(normal_map), light);
    return Response{200, json{{"frame", png_field(frame)}}.dump()};
  });
}

Response handle_params() {
  const TechniqueParams defaults;
  json methods = json::array();
  for (Method m : kAllMethods) {
    json params = json::array();
    for (const ParamSpec& spec : param_specs()) {
      if (!spec.applies_to(m)) continue;
      params.push_back({{"key", spec.key},
                        {"default", spec.get(defaults, m)},
                        {"min", spec.min},
                        {"max", spec.max},
                        {"integer", spec.integral},
                        {"help", spec.help}});
    }
    json entry = {{"name", to_string(m)}, {"inputs", input_count(m)}, {"params", params}};
    if (m == Method::kFourAngle) {
      entry["input_order"] = {"top", "bottom", "left", "right"};
      entry["modes"] = {"difference", "overlay"};
      entry["default_mode"] = to_string(defaults.four_angle.merge_mode);
    }
    methods.push_back(std::move(entry));
  }
  return {200, json{{"methods", methods}, {"max_image_side", kMaxImageSide}}.dump()};
}

struct PreviewServer::Impl {
  ServeOptions options;
  httplib::Server server;
  bool bound = false;
  std::atomic<bool> started{false};
};

PreviewServer::PreviewServer(ServeOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  httplib::Server& srv = impl_->server;
  srv.set_payload_max_length(64u << 20);

  const auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type.c_str());
  };
  srv.Post("/api/generate", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_generate(req.body));
  });
  srv.Post("/api/relight", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_relight(req.body));
  });
  srv.Get("/api/params", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, handle_params());
  });

  std::error_code ec;
  if (std::filesystem::is_directory(impl_->options.asset_dir, ec)) {
    srv.set_mount_point("/", impl_->options.asset_dir.string());
  }
  // Reached only when the asset directory has no index.html.
  srv.Get("/", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(std::string(kFallbackPage), "text/html");
  });
}

PreviewServer::~PreviewServer() { stop(); }

int PreviewServer::bind() {
  int port = impl_->options.port;
  if (port == 0) {
    port = impl_->server.bind_to_any_port(impl_->options.host);
  } else if (!impl_->server.bind_to_port(impl_->options.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error(ErrorCode::kIo, "cannot bind " + impl_->options.host + ":" +
                                    std::to_string(impl_->options.port));
  }
  impl_->bound = true;
  return port;
}

void PreviewServer::run() {
  if (!impl_->bound) throw Error(ErrorCode::kInvalidArgument, "PreviewServer::run before bind");
  impl_->started = true;
  impl_->server.listen_after_bind();
}

void PreviewServer::stop() {
  if (!impl_ || !impl_->started) return;
  // stop() is a no-op until the accept loop is live.
  impl_->server.wait_until_ready();
  impl_->server.stop();
}

void serve(const ServeOptions& options) {
  PreviewServer server(options);
  server.bind();
  server.run();
}

}  // namespace nmapgen::preview
