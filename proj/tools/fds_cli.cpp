#include <iostream>

#include "fds/cli.hpp"

int main(int argc, char** argv) { return fds::run_cli(argc, argv, std::cout, std::cerr); }
