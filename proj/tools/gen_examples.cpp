// Writes the shipped example bundles under data/examples/.

#include <iostream>

#include "decalg/constructions.hpp"
#include "decalg/json_io.hpp"

using namespace decalg;

int main(int argc, char** argv) {
  std::string out = argc > 1 ? argv[1] : "data/examples";
  write_json_file(out + "/peirce_j3.json", decalg_to_json(peirce_context(3)));
  write_json_file(out + "/peirce_j2.json", decalg_to_json(peirce_context(2)));
  std::cout << "wrote " << out << "/peirce_j3.json and peirce_j2.json\n";
  return 0;
}
