#pragma once

// HTTP-facing request handlers. Handlers take the raw request body and
// return status plus response body, so they run the same with or without a
// socket behind them. The only state shared between requests is the level
// store.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "roborun/ast.h"
#include "roborun/diagnostic.h"
#include "roborun/interpreter.h"
#include "roborun/levels.h"
#include "roborun/scoring.h"

namespace roborun {

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// 404 for E_NOT_FOUND, 409 for E_UNSOLVABLE, 500 for E_IO, 400 otherwise.
int StatusFor(const Diagnostics& diags);
ApiResponse ErrorResponse(const Diagnostics& diags);

// Level and program checks followed by execution. The single entry point
// used by both the CLI and the HTTP handlers.
Result<Trace> ValidateAndExecute(const Program& program, const Level& level,
                                 const ExecLimits& limits);

class Service {
 public:
  explicit Service(LevelStore store, ScoreConfig score_config = {});

  ApiResponse Parse(std::string_view body) const;
  ApiResponse Execute(std::string_view body) const;
  ApiResponse Score(std::string_view body) const;
  ApiResponse Export(std::string_view body) const;
  ApiResponse ListLevels() const;
  ApiResponse GetLevel(const std::string& id) const;
  ApiResponse CreateLevel(std::string_view body);

 private:
  LevelStore store_;
  ScoreConfig score_config_;
};

// Binds the handlers under /api and, optionally, static files at /.
class HttpServer {
 public:
  HttpServer(Service& service, std::optional<std::filesystem::path> ui_dir);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Returns the bound port, or -1. Port 0 picks a free port.
  int Bind(const std::string& host, int port);
  // Blocks until Stop() is called from another thread.
  bool Listen();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace roborun
