#include "paginator/cli.hpp"

int main(int argc, char** argv) { return paginator::cli::main(argc, argv); }
