#include "gridroots/cli.hpp"

int main(int argc, char** argv) { return gridroots::run_cli(argc, argv); }
