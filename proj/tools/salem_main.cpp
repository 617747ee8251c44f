#include "salem/cli.hpp"

int main(int argc, char** argv) { return salem::run_cli(argc, argv); }
