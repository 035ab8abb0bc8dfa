#include <iostream>

#include "urbanveg/app/cli.hpp"

int main(int argc, char** argv) { return urbanveg::app::run_cli(argc, argv, std::cout, std::cerr); }
