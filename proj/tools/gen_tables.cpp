// Regenerates the shipped builtin-tables data file from the closed forms.

#include "latb/builtin.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_tables <output.json>\n";
    return 1;
  }
  std::ofstream out(argv[1]);
  if (!out) {
    std::cerr << "cannot open " << argv[1] << "\n";
    return 1;
  }
  out << latb::builtin_tables_json();
  return out ? 0 : 1;
}
