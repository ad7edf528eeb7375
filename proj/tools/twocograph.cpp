#include "twocograph/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  try {
    return twocograph::cli::run(argc, argv, std::cin, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
