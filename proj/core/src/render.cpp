#include "blob/render.hpp"

#include <cstdlib>
#include <sstream>

namespace blob {

std::string render_triangle(const Walk& walk, const AlcoveSystem& sys) {
  const int n = static_cast<int>(walk.size()) - 1;
  std::ostringstream out;
  for (int j = 0; j <= n; ++j) {
    std::string row(2 * n + 1, ' ');
    for (int x = -n; x <= n; ++x) {
      char& cell = row[x + n];
      if (sys.on_wall(x)) cell = '|';
      if (std::abs(x) <= j && (j - x) % 2 == 0 && cell == ' ') cell = '.';
      if (x == walk[j]) cell = '*';
    }
    out << row << '\n';
  }
  return out.str();
}

}  // namespace blob
