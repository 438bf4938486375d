#include "vnum/cli.hpp"

int main(int argc, char** argv) { return vnum::cli::run(argc, argv); }
