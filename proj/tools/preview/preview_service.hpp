#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

namespace nmapgen::preview {

inline constexpr int kDefaultPort = 7878;
inline constexpr int kMaxImageSide = 1024;

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Stateless request handlers; the HTTP layer only routes to these.
//
// POST /api/generate  {"method": "...", "images": [b64...], "params": {...}}
//                     -> {"normal_map": b64}
// POST /api/relight   {"sprite": b64, "normal_map": b64,
//                      "light": {"x":..,"y":..,"z":..,"ambient":..}}
//                     -> {"frame": b64}
// GET  /api/params    -> methods with their parameter defaults and ranges
//
// Errors are {"error": message} with status 400, or 413 when an image side
// exceeds kMaxImageSide.
Response handle_generate(std::string_view body);
Response handle_relight(std::string_view body);
Response handle_params();

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = kDefaultPort;  // 0 picks a free port
  std::filesystem::path asset_dir = "web";
};

class PreviewServer {
 public:
  explicit PreviewServer(ServeOptions options);
  ~PreviewServer();
  PreviewServer(const PreviewServer&) = delete;
  PreviewServer& operator=(const PreviewServer&) = delete;

  // Binds the socket and returns the bound port. Throws on failure.
  int bind();
  // Serves until stop() is called. bind() must have succeeded.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// bind() + run(); blocks until the process is interrupted.
void serve(const ServeOptions& options);

}  // namespace nmapgen::preview
