#include <iostream>

#include "setramsey/cli.hpp"

int main(int argc, char** argv) { return setramsey::cli::run(argc, argv, std::cout, std::cerr); }
