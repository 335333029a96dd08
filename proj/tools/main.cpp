#include "cli.hpp"

int main(int argc, char** argv) { return hypvol::cli::run(argc, argv); }
