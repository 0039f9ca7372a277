#include "sensediff/cli.hpp"

int main(int argc, char** argv) { return sensediff::run_cli(argc, argv); }
