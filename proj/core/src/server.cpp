#include "merger_er/server.hpp"

#include <string>

#include "httplib.h"
#include "merger_er/service.hpp"

namespace merger_er {

struct Server::Impl {
    ServerConfig config;
    httplib::Server http;
};

namespace {

void reply(httplib::Response& res, const HttpReply& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
}

}  // namespace

Server::Server(ServerConfig config) : impl_(std::make_unique<Impl>()) {
    impl_->config = std::move(config);
    httplib::Server& http = impl_->http;
    const std::string base(kApiBase);
    const std::string origin = impl_->config.cors_origin;

    http.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
        if (!origin.empty()) {
            res.set_header("Access-Control-Allow-Origin", origin);
            res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Content-Type");
        }
    });
    http.Options(base + "/.*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    http.Get(base + "/health", [](const httplib::Request&, httplib::Response& res) {
        reply(res, handle_health());
    });
    http.Post(base + "/analyze", [](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_analyze(req.body));
    });
    http.Post(base + "/sweep", [](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_sweep(req.body));
    });
}

Server::~Server() { stop(); }

int Server::bind() {
    if (impl_->config.port == 0) {
        return impl_->http.bind_to_any_port(impl_->config.host);
    }
    return impl_->http.bind_to_port(impl_->config.host, impl_->config.port) ? impl_->config.port : -1;
}

bool Server::run() { return impl_->http.listen_after_bind(); }

void Server::stop() {
    if (impl_->http.is_running()) {
        impl_->http.stop();
    }
}

}  // namespace merger_er
