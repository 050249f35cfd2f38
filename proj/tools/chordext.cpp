#include <iostream>
#include <string>
#include <vector>

#include <chordext/cli.hpp>

int
main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return chordext::cli::run(args, std::cout, std::cerr);
}
