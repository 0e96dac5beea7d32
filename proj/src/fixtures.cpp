#include "nilsem/fixtures.hpp"

namespace nilsem {

Semiring fixture_join_zero() {
  return make_semiring(2, 0, {{0, 1}, {1, 1}}, {{0, 0}, {0, 0}});
}

Semiring fixture_boolean() {
  return make_semiring(2, 0, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
}

Semiring fixture_field2() {
  return make_semiring(2, 0, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}});
}

Semiring fixture_zero_ring(int n) {
  if (n < 1) throw DomainError("zero-ring order must be at least 1");
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) add[i][j] = (i + j) % n;
  return make_semiring(n, 0, add, mul);
}

Semiring fixture_even_mod8() {
  std::vector<std::vector<int>> add(4, std::vector<int>(4));
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      add[i][j] = (i + j) % 4;       // 2i + 2j = 2(i+j mod 4) mod 8
      mul[i][j] = (2 * i * j) % 4;   // 2i * 2j = 4ij = 2(2ij mod 4) mod 8
    }
  return make_semiring(4, 0, add, mul);
}

std::vector<std::pair<std::string, Semiring>> all_fixtures() {
  return {
      {"join-zero", fixture_join_zero()},
      {"boolean", fixture_boolean()},
      {"field2", fixture_field2()},
      {"zero-ring2", fixture_zero_ring(2)},
      {"zero-ring3", fixture_zero_ring(3)},
      {"even-mod8", fixture_even_mod8()},
  };
}

}  // namespace nilsem
