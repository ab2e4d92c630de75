#include "fhs_cli.hpp"

int main(int argc, char** argv) { return fhs::cli::run(argc, argv); }
