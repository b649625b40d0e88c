#include "hypersimplex/cli.hpp"

int main(int argc, char** argv) { return hypersimplex::cli::run(argc, argv); }
