#include <iostream>

#include "mlur_cli/app.hpp"

int main(int argc, char** argv) { return mlur::cli::run(argc, argv, std::cout, std::cerr); }
