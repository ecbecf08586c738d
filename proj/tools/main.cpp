#include "coreg/cli.hpp"

int main(int argc, char** argv) { return coreg::cli_main(argc, argv); }
