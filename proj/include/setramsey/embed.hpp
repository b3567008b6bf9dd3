#pragma once

#include <cstdint>
#include <optional>

#include "setramsey/core.hpp"

namespace setramsey {

// Searches for injective row and column assignments that realize the pattern
// inside the family's incidence matrix. Returns the lexicographically least
// witness under (row_map, col_map) ordering, or nothing. Absence is a value,
// not an error; patterns larger than the family are trivially absent.
std::optional<Embedding> find_embedding(const SetFamily& f,
                                        const PatternMatrix& p);

// Exact number of satisfying (row_map, col_map) pairs by plain exhaustive
// enumeration. Kept deliberately dumb so it can serve as an oracle for
// find_embedding. Throws std::invalid_argument when the enumeration space
// exceeds the guard limit.
std::uint64_t count_embeddings(const SetFamily& f, const PatternMatrix& p);

}  // namespace setramsey
