#include <cstdlib>
#include <iostream>
#include <string>

#include "httplib.h"

#include "ede/service.hpp"

int main() {
    int port = 8080;
    if (const char* env = std::getenv("EDE_PORT")) {
        try {
            port = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "error: EDE_PORT '" << env << "' is not a port number\n";
            return 2;
        }
    }
    const char* host = std::getenv("EDE_HOST");
    std::optional<std::filesystem::path> static_dir;
    if (const char* dir = std::getenv("EDE_STATIC_DIR")) static_dir = dir;

    httplib::Server server;
    ede::service::register_routes(server, static_dir);
    std::cerr << "listening on " << (host ? host : "0.0.0.0") << ':' << port << '\n';
    if (!server.listen(host ? host : "0.0.0.0", port)) {
        std::cerr << "error: cannot listen on port " << port << '\n';
        return 1;
    }
    return 0;
}
