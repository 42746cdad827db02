#include "lie2coh/cli.hpp"

int main(int argc, char** argv) { return lie2coh::cli::run(argc, argv, std::cout, std::cerr); }
