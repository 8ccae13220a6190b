#include <iostream>

#include "faultcalc/cli.hpp"

int main(int argc, char** argv) { return faultcalc::run_cli(argc, argv, std::cout, std::cerr); }
