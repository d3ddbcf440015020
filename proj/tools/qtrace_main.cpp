#include "qtrace/cli.hpp"

int main(int argc, char** argv) { return qtrace::cli_main(argc, argv); }
