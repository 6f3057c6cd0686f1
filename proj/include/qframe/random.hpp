#pragma once

#include <cstdint>
#include <random>

#include "qframe/qmatrix.hpp"

namespace qframe {

/// All generators in the library draw from this engine so that a seed fully
/// determines the output.
using Rng = std::mt19937_64;

/// Quaternion with independent standard normal components.
Quaternion random_quaternion(Rng& rng);
QVector random_vector(std::size_t dim, Rng& rng);
/// Uniform on the unit sphere of H^dim.
QVector random_unit_vector(std::size_t dim, Rng& rng);
QMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
/// B B^dagger + shift I with Gaussian B; positive definite for shift > 0.
QMatrix random_positive(std::size_t n, double shift, Rng& rng);

}  // namespace qframe
