#include "maxangle/cli.hpp"

int main(int argc, char** argv) { return maxangle::run_cli(argc, argv); }
