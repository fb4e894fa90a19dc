// Prints the multiplication table of the P, A, Z, Y, T families for a chosen
// odd alpha and marks the cells where the reference table disagrees.

#include <iomanip>
#include <iostream>

#include "superband/superband.hpp"

int main() {
  using namespace superband;
  auto    alg   = create_algebra(4);
  Element alpha = alg.generator(1) + alg.generator(2) * alg.generator(3) * alg.generator(4);
  auto    table = cayley_table_verify(alpha);

  std::cout << "alpha = " << alpha.to_string() << "\n\n" << std::setw(8) << "";
  for (auto const& op : table.operands) {
    std::cout << std::setw(10) << op;
  }
  std::cout << '\n';
  for (auto const& row : table.cells) {
    std::cout << std::setw(8) << row.front().row;
    for (auto const& cell : row) {
      std::cout << std::setw(10) << (cell.matches() ? cell.computed : cell.computed + "*");
    }
    std::cout << '\n';
  }
  std::cout << "\n* differs from the reference entry:\n";
  for (auto const& c : table.discrepancies) {
    std::cout << "  " << c.row << " x " << c.col << " = " << c.computed
              << " (reference " << c.reference << ")\n";
  }
}
