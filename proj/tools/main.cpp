#include <iostream>

#include "setshare/cli.hpp"

int main(int argc, char** argv) { return setshare::run_cli(argc, argv, std::cout, std::cerr); }
