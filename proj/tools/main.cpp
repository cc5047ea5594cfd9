#include "cli.hpp"

int main(int argc, char** argv) { return hmorita::cli::main_with_args(argc, argv); }
