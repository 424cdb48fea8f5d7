#include "scrollsec/cli/run.hpp"

int main(int argc, char** argv) { return scrollsec::cli::main_entry(argc, argv, std::cout, std::cerr); }
