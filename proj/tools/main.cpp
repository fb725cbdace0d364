#include <iostream>
#include <string>
#include <vector>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        hindman::cli::Report report = hindman::cli::run(args);
        std::cout << report.to_json();
        return report.exit_code();
    } catch (const hindman::cli::HelpRequested& help) {
        std::cout << help.what();
        return 0;
    }
}
