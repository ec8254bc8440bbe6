#include "firerisk/cli.hpp"

int main(int argc, char** argv) { return firerisk::cli::run(argc, argv); }
