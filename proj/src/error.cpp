#include "ede/error.hpp"

namespace ede {
namespace {

std::string render(const std::vector<Diagnostic>& diagnostics) {
    std::string out;
    for (const auto& d : diagnostics) {
        if (!out.empty()) out += '\n';
        if (!d.path.empty()) {
            out += d.path;
            out += ": ";
        }
        out += d.message;
    }
    return out;
}

const std::string kEmpty;

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Syntax: return "syntax";
        case ErrorCode::Schema: return "schema";
        case ErrorCode::Semantic: return "semantic";
        case ErrorCode::Range: return "range";
        case ErrorCode::Io: return "io";
        case ErrorCode::Usage: return "usage";
        case ErrorCode::UnknownFactor: return "unknown-factor";
        case ErrorCode::DuplicateEvidence: return "duplicate-evidence";
        case ErrorCode::OutOfRange: return "out-of-range";
        case ErrorCode::Scale: return "scale";
        case ErrorCode::DegeneratePrior: return "degenerate-prior";
        case ErrorCode::Ordering: return "ordering";
        case ErrorCode::TotalConflict: return "total-conflict";
        case ErrorCode::UndefinedCf: return "undefined-cf";
        case ErrorCode::UnsupportedComparison: return "unsupported-comparison";
    }
    return "unknown";
}

bool is_input_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Syntax:
        case ErrorCode::Schema:
        case ErrorCode::Semantic:
        case ErrorCode::Range:
        case ErrorCode::Io:
        case ErrorCode::Usage:
            return true;
        default:
            return false;
    }
}

Error::Error(ErrorCode code, std::string message, std::string path)
    : Error(code, std::vector<Diagnostic>{{std::move(path), std::move(message)}}) {}

Error::Error(ErrorCode code, std::vector<Diagnostic> diagnostics)
    : std::runtime_error(render(diagnostics)), code_(code), diagnostics_(std::move(diagnostics)) {}

const std::string& Error::path() const noexcept {
    return diagnostics_.empty() ? kEmpty : diagnostics_.front().path;
}

const std::string& Error::message() const noexcept {
    return diagnostics_.empty() ? kEmpty : diagnostics_.front().message;
}

}  // namespace ede
