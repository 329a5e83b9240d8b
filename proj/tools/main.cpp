#include <iostream>

#include "permsolv/cli.hpp"

int main(int argc, char **argv) {
  return permsolv::cli_dispatch(argc, argv, std::cout, std::cerr);
}
