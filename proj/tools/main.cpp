#include <iostream>

#include "rootlines/cli.hpp"

int main(int argc, char** argv) { return rootlines::run(argc, argv, std::cout, std::cerr); }
