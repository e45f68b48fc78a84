// Walks the whole catalog and prints, for each entry, its chord inventory in
// brief plus which transpositions act as symmetries. A compact tour of what
// the library computes.

#include <iostream>

#include "tonnetz/report.hpp"

int main() {
  using namespace tonnetz;
  for (const auto& [key, name] : catalog_key_names()) {
    const CatalogEntry entry = build(key);
    const Inventory inv = inventory(entry.tonnetz);
    std::cout << name << " — " << entry.provenance << "\n";
    std::cout << "  faces: ";
    for (const auto& [q, n] : inv.face_census)
      std::cout << q.str() << (n > 1 ? " x" + std::to_string(n) : "") << "; ";
    std::cout << "\n  symmetric transpositions:";
    for (int k = 0; k < kPitchClasses; ++k)
      if (find_transposition_symmetry(entry.tonnetz, Interval(k)))
        std::cout << " +" << k;
    std::cout << "\n";
    if (key == CatalogKey::bauble) {
      std::cout << "  quadrilaterals:";
      for (const auto& q : bauble_quadrilaterals(entry)) std::cout << " " << q.chord.str();
      std::cout << "\n";
    }
  }
  return 0;
}
