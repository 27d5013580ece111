#pragma once

#include <memory>
#include <string>

namespace merger_er {

struct ServerConfig {
    std::string host = "127.0.0.1";
    int port = 8080;  // 0 binds an ephemeral port
    std::string cors_origin = "*";
};

/// HTTP front end for the handlers in service.hpp. Handlers are stateless, so
/// concurrent requests share nothing but the configuration.
class Server {
public:
    explicit Server(ServerConfig config);
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Binds the socket and returns the bound port, or -1 on failure.
    int bind();
    /// Serves until stop(); call after bind().
    bool run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace merger_er
