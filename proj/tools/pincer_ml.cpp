#include <iostream>

#include "pincer_ml/cli.hpp"

int main(int argc, char** argv) { return pincer_ml::cli::run(argc, argv, std::cout, std::cerr); }
