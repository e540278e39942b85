// Prints sphere sizes for a few groups and the dead ends found on the way.

#include <iostream>

#include "cayley/cayley.hpp"

int main() {
  using namespace cayley;

  AbelianGroup z23(1, {{2}, {3}});
  auto dmap = ball_distances(z23, 12);
  std::cout << "Z with generators {2,3}, spheres up to radius 12:\n ";
  for (auto s : dmap.sphere_sizes()) std::cout << ' ' << s;
  std::cout << "\n";
  for (const auto& rec : scan_dead_ends(z23, dmap))
    std::cout << "  dead end " << z23.format(rec.element) << " at distance "
              << rec.n << ", depth " << rec.depth << "\n";

  HoughtonH2 h2;
  auto hmap = ball_distances(h2, 8);
  std::cout << "\nHoughton group H2, spheres up to radius 8:\n ";
  for (auto s : hmap.sphere_sizes()) std::cout << ' ' << s;
  std::cout << "\n";

  auto g2 = HoughtonH2::make_gk(2);
  std::cout << "\ng_2 = " << h2.format(g2) << ", effect " << effect(g2)
            << ", Y-word length " << build_w(2).length() << ", expanded length "
            << expand_to_x(h2, build_w(2)).length() << "\n";
  return 0;
}
