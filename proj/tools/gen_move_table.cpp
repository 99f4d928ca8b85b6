// Regenerates src/gauss_move_table_data.cpp from the planar-diagram oracle.

#include <iostream>

#include "weldknot/move_oracle.hpp"

using namespace weldknot;

static void print_section(const char* name, const std::set<std::string>& section) {
  std::cout << "    t." << name << " = {\n";
  for (const std::string& key : section) std::cout << "        \"" << key << "\",\n";
  std::cout << "    };\n";
}

int main() {
  GaussMoveTable t = derive_gauss_move_table();
  std::cout << "// Baked Gauss-level move table, derived from the planar-diagram oracle\n"
               "// (derive_gauss_move_table). Regenerated with tools/gen_move_table; the test\n"
               "// suite checks this copy against a fresh derivation.\n"
               "\n"
               "#include \"weldknot/move_table.hpp\"\n"
               "\n"
               "namespace weldknot {\n"
               "\n"
               "const GaussMoveTable& gauss_move_table() {\n"
               "  static const GaussMoveTable table = [] {\n"
               "    GaussMoveTable t;\n";
  std::cout << "    t.version = \"" << t.version << "\";\n";
  print_section("c1", t.c1);
  print_section("w", t.w);
  print_section("c2", t.c2);
  print_section("c3", t.c3);
  print_section("delta", t.delta);
  print_section("sharp", t.sharp);
  std::cout << "    t.c2_insertions(); // expand eagerly; the table is shared read-only\n"
               "    return t;\n"
               "  }();\n"
               "  return table;\n"
               "}\n"
               "\n"
               "} // namespace weldknot\n";
  return 0;
}
