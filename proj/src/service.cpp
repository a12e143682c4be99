#include "penta/service.hpp"

#include <cstdlib>
#include <functional>

#include <httplib.h>

#include "penta/api.hpp"

namespace penta {

namespace {

using api::json;

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void route(httplib::Server& srv, const char* path, std::function<json(const json&)> fn) {
  srv.Post(path, [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
    json body;
    try {
      body = json::parse(req.body);
    } catch (const json::parse_error& e) {
      reply(res, 400, json{{"error", "ParseError"}, {"message", e.what()}});
      return;
    }
    try {
      reply(res, 200, fn(body));
    } catch (const InvalidSeed& e) {
      reply(res, 422, io::error_json(e));
    } catch (const ParseError& e) {
      reply(res, 400, io::error_json(e));
    } catch (const json::exception& e) {
      reply(res, 400, json{{"error", "ParseError"}, {"message", e.what()}});
    } catch (const std::exception& e) {
      reply(res, 500, io::error_json(e));
    }
  });
}

const json& seed_of(const json& body) {
  // Either {"seed": {...}, ...} or a bare seed object.
  return body.contains("seed") ? body.at("seed") : body;
}

void install(httplib::Server& srv) {
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  srv.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  srv.Get("/health", [](const httplib::Request&, httplib::Response& res) { reply(res, 200, json{{"ok", true}}); });

  route(srv, "/seed/validate", [](const json& b) { return api::validate(seed_of(b)); });
  route(srv, "/seed/step", [](const json& b) {
    return api::step(seed_of(b), b.value("power", 1), b.value("inverse", false), true);
  });
  route(srv, "/seed/normalize", [](const json& b) { return api::normalize(seed_of(b), true); });
  route(srv, "/spiral/window", [](const json& b) {
    return api::spiral_window(seed_of(b), b.value("j_min", 1), b.value("j_max", 20));
  });
  route(srv, "/invariants", [](const json& b) { return api::invariants(seed_of(b), true); });
  route(srv, "/limit-point", [](const json& b) { return api::limit_point(seed_of(b), b.value("tol", 1e-9)); });
  route(srv, "/limit-point/orbit", [](const json& b) {
    return api::limit_point_orbit(seed_of(b), b.value("m_max", 20), b.value("tol", 1e-9));
  });
  route(srv, "/lps", [](const json& b) { return api::lps(b.at("n").get<int>(), b.at("k").get<int>(), b.value("tol", 1e-11)); });
}

}  // namespace

Service::Service() : server_(std::make_unique<httplib::Server>()) { install(*server_); }

Service::~Service() { stop(); }

bool Service::listen(const std::string& host, int port) { return server_->listen(host, port); }

int Service::start(const std::string& host, int port) {
  int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) return -1;
  worker_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void Service::stop() {
  if (server_) server_->stop();
  if (worker_.joinable()) worker_.join();
}

int service_port(int requested) {
  if (const char* env = std::getenv("PENTA_PORT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return requested;
}

}  // namespace penta
