#include "starlike/cli.hpp"

int main(int argc, char** argv) { return starlike::cli::run(argc, argv); }
