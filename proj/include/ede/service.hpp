#pragma once
// Stateless JSON-over-HTTP facade. Every request carries its own knowledge
// base, so handlers are pure functions of the request body.
//
// Routes: POST /api/evaluate, POST /api/sweep, POST /api/compare,
// GET /api/schema, GET /healthz, static UI assets at "/".
// Errors: 400 for malformed or invalid documents, 422 for evaluation errors,
// 404 for unknown routes; body {"error": string, "path": string|null}.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace ede::service {

struct Response {
    int status = 200;
    std::string body;

    friend bool operator==(const Response&, const Response&) = default;
};

Response handle_evaluate(std::string_view body);
Response handle_sweep(std::string_view body);
Response handle_compare(std::string_view body);
Response handle_schema();
Response handle_health();

// Registers every route on `server`. Without a static directory, "/" serves a
// short placeholder page.
void register_routes(httplib::Server& server, const std::optional<std::filesystem::path>& static_dir);

}  // namespace ede::service
