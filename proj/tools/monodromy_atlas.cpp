#include "cli.hpp"

int main(int argc, char** argv) { return monodromy::cli::run(argc, argv); }
