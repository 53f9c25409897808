#include <iostream>

#include "rr/cli.hpp"

int main(int argc, char** argv) { return rr::dispatch(argc, argv, std::cout, std::cerr); }
