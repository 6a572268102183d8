#include "lvelab/cli.hpp"

int main(int argc, char** argv) { return lvelab::run_cli(argc, argv); }
