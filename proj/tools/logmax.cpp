#include "cli.hpp"

int main(int argc, char** argv) { return logmax::cli::run(argc, argv, std::cout, std::cerr); }
