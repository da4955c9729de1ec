#include "ede/service.hpp"

#include <fmt/format.h>

#include "httplib.h"

#include "ede/aggregation.hpp"
#include "ede/calculi.hpp"
#include "ede/kb_io.hpp"

namespace ede::service {

namespace {

using nlohmann::json;

constexpr const char* kJson = "application/json";

Response ok(const json& body) { return {200, body.dump()}; }

Response error_response(int status, const std::string& message, const std::string& path) {
    json body = {{"error", message}, {"path", path.empty() ? json(nullptr) : json(path)}};
    return {status, body.dump()};
}

struct Request {
    KbDocument doc;
    std::vector<EvidenceItem> evidence;
    EvaluationOptions options;
    json raw;
};

Request parse_request(std::string_view body, std::initializer_list<std::string_view> extra_fields) {
    Request req;
    req.raw = parse_json(body);
    if (!req.raw.is_object()) throw Error(ErrorCode::Schema, "request body must be an object");
    for (const auto& [key, _] : req.raw.items()) {
        const bool known = key == "kb" || key == "evidence" || key == "options" ||
                           std::find(extra_fields.begin(), extra_fields.end(), key) != extra_fields.end();
        if (!known) throw Error(ErrorCode::Schema, fmt::format("unknown field '{}'", key), key);
    }
    if (!req.raw.contains("kb")) throw Error(ErrorCode::Schema, "missing required field", "kb");

    req.doc = kb_from_json(req.raw.at("kb"));
    if (req.raw.contains("evidence")) req.evidence = evidence_from_json(req.raw.at("evidence"));
    req.options = req.doc.options.value_or(EvaluationOptions{});
    if (req.raw.contains("options")) req.options = options_from_json(req.raw.at("options"), "options", req.options);
    validate_options(req.options);
    return req;
}

template <typename Fn>
Response guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& err) {
        return error_response(err.is_input_error() ? 400 : 422, err.what(), err.path());
    } catch (const std::exception& ex) {
        return error_response(500, ex.what(), "");
    }
}

void reply(httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, kJson);
}

constexpr const char* kPlaceholderPage =
    "<!doctype html><html><head><title>ede</title></head><body>"
    "<p>Evidential decision engine API. The what-if UI is not installed; "
    "set EDE_STATIC_DIR to its build directory.</p>"
    "<p>Schema: <a href=\"/api/schema\">/api/schema</a></p></body></html>";

}  // namespace

Response handle_evaluate(std::string_view body) {
    return guarded([&] {
        const auto req = parse_request(body, {});
        const auto result = evaluate_pipeline(req.doc.kb, req.evidence, req.options);
        return ok({{"belief", result.belief.value()}, {"trace", to_json(result.trace)}, {"warnings", result.warnings}});
    });
}

Response handle_sweep(std::string_view body) {
    return guarded([&] {
        const auto req = parse_request(body, {"factor", "steps"});
        const json& raw = req.raw;
        if (!raw.contains("factor") || !raw.at("factor").is_string()) {
            throw Error(ErrorCode::Schema, "expected a factor id string", "factor");
        }
        if (!raw.contains("steps") || !raw.at("steps").is_number_integer()) {
            throw Error(ErrorCode::Schema, "expected an integer", "steps");
        }
        const auto factor = raw.at("factor").get<std::string>();
        const auto steps = raw.at("steps").get<long long>();
        if (steps < 2 || steps > 100000) throw Error(ErrorCode::Range, "steps must be in [2, 100000]", "steps");
        const auto rows = sweep_factor(req.doc.kb, req.evidence, req.options, factor, static_cast<int>(steps));
        return ok({{"factor", factor}, {"steps", steps}, {"rows", to_json(rows)}});
    });
}

Response handle_compare(std::string_view body) {
    return guarded([&] {
        const auto req = parse_request(body, {});
        const auto table = compare_calculi(req.doc.kb, req.evidence, req.options);
        json rows = json::array();
        for (const auto& row : table.rows) {
            rows.push_back({{"calculus", std::string(to_string(row.calculus))},
                            {"value", row.value ? json(*row.value) : json(nullptr)},
                            {"note", row.note}});
        }
        return ok({{"prior", table.prior},
                   {"support", table.support},
                   {"adversity", table.adversity},
                   {"rows", std::move(rows)}});
    });
}

Response handle_schema() { return ok(field_schema()); }

Response handle_health() { return ok({{"status", "ok"}}); }

void register_routes(httplib::Server& server, const std::optional<std::filesystem::path>& static_dir) {
    server.Post("/api/evaluate",
                [](const httplib::Request& req, httplib::Response& res) { reply(res, handle_evaluate(req.body)); });
    server.Post("/api/sweep",
                [](const httplib::Request& req, httplib::Response& res) { reply(res, handle_sweep(req.body)); });
    server.Post("/api/compare",
                [](const httplib::Request& req, httplib::Response& res) { reply(res, handle_compare(req.body)); });
    server.Get("/api/schema", [](const httplib::Request&, httplib::Response& res) { reply(res, handle_schema()); });
    server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) { reply(res, handle_health()); });

    if (static_dir && std::filesystem::is_directory(*static_dir)) {
        server.set_mount_point("/", static_dir->string());
    } else {
        server.Get("/", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(kPlaceholderPage, "text/html");
        });
    }

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (!res.body.empty()) return;
        const std::string message = res.status == 404 ? "not found" : httplib::status_message(res.status);
        reply(res, error_response(res.status, message, ""));
    });
}

}  // namespace ede::service
