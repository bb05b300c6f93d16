#include <iostream>

#include "gvkit/cli/app.hpp"

int main(int argc, char** argv) { return gvkit::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
