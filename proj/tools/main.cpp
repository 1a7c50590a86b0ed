#include "ptp/cli/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_tol;
    if (const char* t = std::getenv("PTP_TOL")) env_tol = t;
    return ptp::cli::run(args, std::cout, std::cerr, env_tol);
}
