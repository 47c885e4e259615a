#include <string>
#include <vector>

#include "exhull/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return exhull::run_cli(args);
}
