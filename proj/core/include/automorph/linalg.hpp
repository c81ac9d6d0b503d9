#ifndef AUTOMORPH_LINALG_HPP
#define AUTOMORPH_LINALG_HPP

#include <cstddef>
#include <vector>

#include <automorph/rational.hpp>

namespace automorph
{

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form over Q with zero rows removed. Rows must share a
// common length.
RationalMatrix row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix &m);

} // namespace automorph

#endif
