#include <iostream>
#include <string>
#include <vector>

#include "bbs/cli_run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string out;
    int code = bbs::cli_run(args, out);
    std::cout << out;
    return code;
}
