#include "isosum/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return isosum::run(argc, argv, std::cout, std::cerr); }
