#include <iostream>

#include "krammer/cli.hpp"

int main(int argc, char** argv) { return krammer::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
