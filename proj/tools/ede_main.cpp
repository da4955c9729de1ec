#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "ede/cli.hpp"

int main(int argc, char** argv) {
    const bool color = std::getenv("EDE_NO_COLOR") == nullptr && ::isatty(STDERR_FILENO) != 0;
    return ede::cli::run(argc, argv, {std::cout, std::cerr, color});
}
