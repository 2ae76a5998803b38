#include <vector>

#include "gptcap/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gptcap::cli::dispatch(args);
}
