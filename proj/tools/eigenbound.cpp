#include <iostream>
#include <string>
#include <vector>

#include "eigenbound/cli.hpp"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv, argv + argc);
  return eigenbound::cli::run(args, std::cout, std::cerr);
}
