#include "vop/cli.hpp"

int main(int argc, char** argv) { return vop::cli::run(argc, argv); }
