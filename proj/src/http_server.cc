#include <utility>

#include "httplib.h"
#include "roborun/service.h"

namespace roborun {

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;

  explicit Impl(Service& s) : service(s) {}
};

namespace {

constexpr std::size_t kMaxBodyBytes = 1 << 20;

void Reply(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body, api.content_type);
}

}  // namespace

HttpServer::HttpServer(Service& service, std::optional<std::filesystem::path> ui_dir)
    : impl_(std::make_unique<Impl>(service)) {
  httplib::Server& srv = impl_->server;
  Service& svc = impl_->service;
  srv.set_payload_max_length(kMaxBodyBytes);

  srv.Get("/api/levels", [&svc](const httplib::Request&, httplib::Response& res) {
    Reply(res, svc.ListLevels());
  });
  srv.Get(R"(/api/levels/([A-Za-z0-9_\-]+))",
          [&svc](const httplib::Request& req, httplib::Response& res) {
            Reply(res, svc.GetLevel(req.matches[1]));
          });
  srv.Post("/api/levels", [&svc](const httplib::Request& req, httplib::Response& res) {
    Reply(res, svc.CreateLevel(req.body));
  });
  srv.Post("/api/parse", [&svc](const httplib::Request& req, httplib::Response& res) {
    Reply(res, svc.Parse(req.body));
  });
  srv.Post("/api/execute", [&svc](const httplib::Request& req, httplib::Response& res) {
    Reply(res, svc.Execute(req.body));
  });
  srv.Post("/api/score", [&svc](const httplib::Request& req, httplib::Response& res) {
    Reply(res, svc.Score(req.body));
  });
  srv.Post("/api/export", [&svc](const httplib::Request& req, httplib::Response& res) {
    Reply(res, svc.Export(req.body));
  });
  if (ui_dir) srv.set_mount_point("/", ui_dir->string());
}

HttpServer::~HttpServer() = default;

int HttpServer::Bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::Listen() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() { impl_->server.stop(); }

void HttpServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace roborun
