#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ede {

enum class ErrorCode {
    // Input errors: the document or argument itself is wrong.
    Syntax,
    Schema,
    Semantic,
    Range,
    Io,
    Usage,
    // Computation errors: well-formed input that cannot be evaluated.
    UnknownFactor,
    DuplicateEvidence,
    OutOfRange,
    Scale,
    DegeneratePrior,
    Ordering,
    TotalConflict,
    UndefinedCf,
    UnsupportedComparison,
};

std::string_view to_string(ErrorCode code) noexcept;

// Input errors map to CLI exit 2 / HTTP 400, everything else to 3 / 422.
bool is_input_error(ErrorCode code) noexcept;

struct Diagnostic {
    std::string path;  // field path such as "factors[0].roles[1].intensity"; may be empty
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string path = {});
    Error(ErrorCode code, std::vector<Diagnostic> diagnostics);

    ErrorCode code() const noexcept { return code_; }
    bool is_input_error() const noexcept { return ede::is_input_error(code_); }
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

    // Path of the first diagnostic, empty when the error is not tied to a field.
    const std::string& path() const noexcept;
    // Message of the first diagnostic without the path prefix.
    const std::string& message() const noexcept;

private:
    ErrorCode code_;
    std::vector<Diagnostic> diagnostics_;
};

}  // namespace ede
