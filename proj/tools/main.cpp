#include "cli.hpp"

int main(int argc, char** argv) { return acmwild::cli::main_entry(argc, argv); }
