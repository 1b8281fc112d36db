#include <iostream>

#include "amcm/cli.hpp"

int main(int argc, char** argv) { return amcm::cli::run(argc, argv, std::cout, std::cerr); }
