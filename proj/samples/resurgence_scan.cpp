// Prints the Waldschmidt trace and the containment failures of G(n,r).
// Usage: sample_resurgence [n r]

#include <cstdlib>
#include <iostream>

#include "spl/asymptotics.hpp"
#include "spl/lp_invariants.hpp"

int main(int argc, char** argv) {
  const int n = argc > 2 ? std::atoi(argv[1]) : 5;
  const int r = argc > 2 ? std::atoi(argv[2]) : 1;
  try {
    const spl::CirculantGraph g(n, r);
    std::cout << "G(" << n << "," << r << "): waldschmidt " << spl::to_string(spl::waldschmidt(n, r))
              << ", resurgence " << spl::to_string(spl::closed_form_resurgence(n, r)) << "\n";
    for (const auto& p : spl::waldschmidt_trace(g, g.cover_size()))
      std::cout << "  alpha(I^(" << p.t << ")) = " << p.alpha << ", ratio " << spl::to_string(p.ratio) << "\n";
    const auto rep = spl::resurgence_estimate(g, 12, 10);
    for (const auto& p : rep.tested_pairs)
      if (!p.contained && p.s >= p.t) std::cout << "  I^(" << p.s << ") not in I^" << p.t << "\n";
    if (rep.max_failing_ratio)
      std::cout << "largest failing s/t: " << spl::to_string(*rep.max_failing_ratio) << "\n";
  } catch (const spl::error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
