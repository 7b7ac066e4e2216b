// Writes the involution table of each real form given on the command line.
#include <fstream>
#include <iostream>

#include "flagdom/error.hpp"
#include "flagdom/realform.hpp"

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: flagdom-tables OUTDIR FORM...\n";
    return 2;
  }
  try {
    for (int i = 2; i < argc; ++i) {
      const auto spec = flagdom::parse_real_form(argv[i]);
      std::string name = spec.key();
      for (auto& ch : name) if (ch == ',') ch = '_';
      std::ofstream out(std::string(argv[1]) + "/" + name + ".tbl");
      out << flagdom::render_involution_table(flagdom::involution_data(spec));
    }
  } catch (const flagdom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
