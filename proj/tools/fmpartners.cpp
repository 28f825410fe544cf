#include <iostream>
#include <string>
#include <vector>

#include "fmpartners/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = fmp::cli::run(args);
    std::cout << result.out;
    return result.status;
}
