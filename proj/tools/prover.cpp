#include <iostream>

#include "adt/frontend/runner.hpp"

int main(int argc, char** argv) { return adt::runCli(argc, argv, std::cin, std::cout, std::cerr); }
