#include "dcone/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return dcone::run(argc, argv, std::cout, std::cerr);
}
