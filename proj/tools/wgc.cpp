#include <iostream>

#include "wgc/cli.hpp"

int main(int argc, char** argv) { return wgc::cli::run(argc, argv, std::cout, std::cerr); }
