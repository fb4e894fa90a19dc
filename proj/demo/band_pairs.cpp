// Draws random band pairs (K0, K1), builds F(t) = K0 + t K1 and reports the
// three equivalent statements alongside a perturbed, non-band family.

#include <iostream>

#include "superband/superband.hpp"

int main() {
  using namespace superband;
  Sampler rng(create_algebra(4), 2024);
  auto    t = TimePoly::variable(kT);
  for (unsigned p : {1u, 2u}) {
    auto [k0, k1] = rng.band_pair(p);
    for (bool perturb : {false, true}) {
      auto f = lift(k0) + t * lift(perturb ? k1 + rng.supermatrix(p, p) : k1);
      auto r = equivalence_report(f);
      std::cout << "(" << p << "|" << p << ")" << (perturb ? " perturbed" : " band     ")
                << "  band=" << r.band << " functional=" << r.functional
                << " differential=" << r.differential << '\n';
      for (auto const& rel : r.relations) {
        std::cout << "    " << rel.id << (rel.holds ? "  ok  " : "  --  ") << rel.statement << '\n';
      }
    }
  }
}
