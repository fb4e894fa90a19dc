// Laplace transforms of the translational family T and the moving-time family
// P, and the defect of the resolvent identity for each.

#include <iostream>

#include "superband/superband.hpp"

int main() {
  using namespace superband;
  auto    alg   = create_algebra(3);
  Element alpha = alg.generator(2);
  auto    P     = make_family(FamilyKind::P, alpha);
  auto    T     = make_family(FamilyKind::T, alpha);

  auto show = [](char const* name, LaurentMatrix const& m) {
    std::cout << name << ":\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        std::cout << "  [" << i << "," << j << "] " << m(i, j).to_string() << '\n';
      }
    }
  };
  show("R_T(z)", laplace(T));
  show("R_P(z)", laplace(P));
  show("R_T(z) - R_T(w) - (w - z) R_T(z) R_T(w)", resolvent_defect(laplace(T)));
  show("R_P(z) - R_P(w) - (w - z) R_P(z) R_P(w)", resolvent_defect(laplace(P)));

  GrassmannVector x0({Element(1) + alg.generator(1) * alg.generator(3)}, {alg.generator(1)});
  std::cout << "moving-time check on P: " << to_string(moving_time_check(P)) << '\n'
            << "obstruction alpha(alpha x0 + k0): "
            << commutativity_obstruction(x0, alpha).to_string() << '\n';
}
