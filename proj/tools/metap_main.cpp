#include "metap/cli.hpp"

int main(int argc, char** argv) { return metap::run_cli(argc, argv); }
