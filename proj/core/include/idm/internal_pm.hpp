#pragma once

#include <span>

#include "idm/text_index.hpp"

namespace idm {

/// Length of the longest prefix of U that occurs somewhere inside V.
/// U must be non-empty; an empty V yields 0.
int32_t bounded_lcp(const TextIndex& ti, Fragment u, Fragment v);

/// Whether the string T[P] occurs inside the window T[i..j].
bool exists(const TextIndex& ti, Fragment p, int32_t i, int32_t j);

/// Number of stored lengths that are <= bound. `lengths` must be sorted.
int64_t predecessor_count(std::span<const int32_t> lengths, int64_t bound);

}  // namespace idm
