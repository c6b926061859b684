#include <iostream>

#include "trisectrix/cli/commands.hpp"

int main(int argc, char** argv) { return trisectrix::cli::run(argc, argv, std::cerr); }
