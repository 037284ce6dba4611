#include <iostream>
#include <string>
#include <vector>

#include "vfindex/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        std::cout << vfindex::cli::kUsage;
        return args.empty() ? vfindex::cli::kExitParseError : vfindex::cli::kExitOk;
    }
    return vfindex::run_cli(args, std::cout, std::cerr);
}
