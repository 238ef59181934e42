#include <iostream>

#include "configcomplex/cli.hpp"

int main(int argc, char** argv) { return configcomplex::cli::run(argc, argv, std::cout, std::cerr); }
