#include <iostream>

#include "sinc_expdecay/cli.hpp"

int main(int argc, char** argv) { return sinc::cli::run(argc, argv, std::cout, std::cerr); }
