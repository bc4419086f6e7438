#include <exception>
#include <iostream>

#include "cia/cli.hpp"

int main(int argc, char** argv) {
  try {
    return cia::cli_main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "align: " << e.what() << "\n";
    return 2;
  }
}
