#include "logcone/cli.hpp"

int main(int argc, char** argv) { return logcone::run_cli(argc, argv); }
