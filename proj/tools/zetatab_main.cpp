#include "zetatab/cli.hpp"

int main(int argc, char** argv) { return zetatab::cli::run(argc, argv); }
