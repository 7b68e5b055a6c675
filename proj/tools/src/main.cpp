#include "scg/cli.hpp"

int main(int argc, char** argv) { return scg::cli::run(argc, argv); }
