#include "commands.hpp"

#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    comblock::cli::Streams io{std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0};
    return comblock::cli::run(args, io);
}
