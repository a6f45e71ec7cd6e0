#pragma once

#include <string>
#include <vector>

#include "orbk/input.hpp"
#include "orbk/report.hpp"

namespace orbk {

/// Brute-force references computed from explicit matrix products, sharing no
/// code with the table-driven implementation.
namespace oracle {

/// n[a][b][d] = #{(x, y) in C_a x C_b : xy = g} for any fixed g in C_d.
std::vector<std::vector<std::vector<Integer>>> class_sum_convolution(const FiniteMatrixGroup& group);

/// #{(h_1..h_k) in C_1 x ... x C_k : h_1 ... h_k = 1} by direct enumeration.
Integer product_tuples(const FiniteMatrixGroup& group, const std::vector<std::size_t>& classes);

}  // namespace oracle

/// Every invariant that applies to the group: group structure, degree
/// shifting numbers, graded tables, both ring models, counting and goodness.
std::vector<VerificationReport> verify_matrix_group(const std::string& name, const MatrixGroupInput& input);

std::vector<VerificationReport> verify_wps(const std::vector<unsigned>& weights);

/// The whole built-in corpus plus every weighted projective space with
/// weight sum <= 10.
std::vector<VerificationReport> verify_builtin_corpus();

}  // namespace orbk
