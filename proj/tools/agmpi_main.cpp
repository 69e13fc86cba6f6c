#include "agmpi/cli.hpp"

int main(int argc, char** argv) { return agmpi::cli::main_entry(argc, argv); }
