#include <iostream>

#include "polycoord/cli.hpp"

int main(int argc, char **argv) { return polycoord::cli::run(argc, argv, std::cout); }
