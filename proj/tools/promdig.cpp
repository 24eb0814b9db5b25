#include <iostream>
#include <string>
#include <vector>

#include "promdig/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return promdig::run_cli(args, std::cout, std::cerr);
}
