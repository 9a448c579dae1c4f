#include "turan/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return turan::cli::run(argc, argv, std::cout, std::cerr); }
