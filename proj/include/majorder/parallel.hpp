#pragma once

#include <cstddef>
#include <functional>

namespace majorder {

/// Splits [0, count) into `threads` contiguous chunks and runs
/// body(begin, end, chunk) for each, one thread per chunk. Chunk c covers a
/// lower range than chunk c+1, so per-chunk outputs concatenated in chunk
/// order reproduce the sequential order. Exceptions from the first failing
/// chunk are rethrown after all threads join.
void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body);

}  // namespace majorder
