#include <zmsp/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return zmsp::cli::main_entry(argc, argv, std::cout, std::cerr); }
