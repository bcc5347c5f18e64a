#include "coxwalls/systems.hpp"

#include <string>

namespace coxwalls::systems {

CoxeterSystem dihedral(int m) { return CoxeterSystem({"s", "t"}, {{1, m}, {m, 1}}); }

CoxeterSystem infinite_dihedral() { return dihedral(kInfinity); }

CoxeterSystem grid() {
  return CoxeterSystem({"a", "b", "c", "d"}, {{1, 0, 2, 2}, {0, 1, 2, 2}, {2, 2, 1, 0}, {2, 2, 0, 1}});
}

CoxeterSystem affine_a2() { return CoxeterSystem({"s", "t", "u"}, {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}); }

CoxeterSystem a3() { return CoxeterSystem({"s", "t", "u"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}); }

CoxeterSystem a1_x_a2() { return CoxeterSystem({"s", "t", "u"}, {{1, 2, 2}, {2, 1, 3}, {2, 3, 1}}); }

CoxeterSystem right_angled_finite(std::size_t rank) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> matrix(rank, std::vector<int>(rank, 2));
  for (std::size_t i = 0; i < rank; ++i) {
    names.push_back(rank <= 3 ? std::string(1, "stu"[i]) : "g" + std::to_string(i));
    matrix[i][i] = 1;
  }
  return CoxeterSystem(std::move(names), std::move(matrix));
}

}  // namespace coxwalls::systems
