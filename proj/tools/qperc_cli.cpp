#include "qperc/cli.hpp"

int main(int argc, char** argv) { return qperc::cli_main(argc, argv, std::cout, std::cerr); }
