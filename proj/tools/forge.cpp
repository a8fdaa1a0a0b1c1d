#include <iostream>

#include "forge/cli.hpp"

int main(int argc, char** argv) { return forge::cli_main(argc, argv, std::cout, std::cerr); }
