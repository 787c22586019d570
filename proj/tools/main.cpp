#include "bruhat/cli.hpp"

int main(int argc, char** argv) { return bruhat::cli::main(argc, argv); }
