#pragma once
// Command-line frontend. Exit codes: 0 success, 2 input error (bad flags,
// unreadable or invalid documents), 3 computation error.

#include <iosfwd>

namespace ede::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitComputation = 3;

struct Streams {
    std::ostream& out;
    std::ostream& err;
    bool color = false;  // ANSI styling on diagnostics
};

int run(int argc, const char* const* argv, Streams streams);

}  // namespace ede::cli
