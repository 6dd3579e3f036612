#include "cli.hpp"

int main(int argc, char** argv) { return qcest::cli::main_entry(argc, argv); }
