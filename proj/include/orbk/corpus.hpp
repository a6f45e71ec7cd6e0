#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "orbk/fingroup.hpp"
#include "orbk/input.hpp"
#include "orbk/sectors.hpp"

namespace orbk {

/// Named groups used by `verify` and by the tests.
namespace groups {

/// Z_n = <diag(zeta_n, zeta_n^-1)> in SL(2, C).
MatrixGroupInput cyclic_sl2(unsigned n);
/// Z_n = <zeta_n> acting on C.
MatrixGroupInput cyclic_gl1(unsigned n);
/// Z_4 = <diag(zeta_4, -1)>.
MatrixGroupInput z4_mixed();
/// Z_2 + Z_2 acting on C^2 coordinate-wise.
MatrixGroupInput klein_four();
/// S_3 by permutation matrices on C^3, generated by (12) and (123).
MatrixGroupInput s3_permutation();
/// Q_8 = <[[i, 0], [0, -i]], [[0, 1], [-1, 0]]> in SU(2).
MatrixGroupInput quaternion();

}  // namespace groups

struct CorpusEntry {
  std::string name;
  MatrixGroupInput input;
};

/// Z_n in SL(2) for 2 <= n <= 12, Z_3 in GL(1), Z_4 = <diag(zeta_4, -1)>,
/// Z_2 + Z_2, S_3 on C^3, Q_8, and Z_n on C for 2 <= n <= 9.
std::vector<CorpusEntry> builtin_corpus();

/// Every weight vector (ordered) with gcd 1 and sum <= max_sum.
std::vector<std::vector<unsigned>> wps_corpus(unsigned max_sum = 10);

std::shared_ptr<const FiniteMatrixGroup> close_group(const MatrixGroupInput& input, std::size_t cap = kDefaultCap);

}  // namespace orbk
