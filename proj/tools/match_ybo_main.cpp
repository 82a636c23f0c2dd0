#include <iostream>

#include "match_ybo/cli.hpp"

int main(int argc, char** argv) { return match_ybo::run_cli(argc, argv, std::cout, std::cerr); }
