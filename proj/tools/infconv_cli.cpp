#include "infconv/cli.hpp"

int main(int argc, char** argv) { return infconv::run_cli(argc, argv); }
