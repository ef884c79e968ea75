#include "vperiod/cli.hpp"

int main(int argc, char** argv) { return vperiod::run_cli(argc, argv); }
