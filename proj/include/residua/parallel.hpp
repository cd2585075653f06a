#pragma once

#include <functional>

#include "residua/int128.hpp"

namespace residua {

/// Worker count: RESIDUA_THREADS if set, otherwise hardware concurrency.
unsigned worker_count();

/// Runs fn(chunk_begin, chunk_end) over [begin, end) on worker threads.
/// Nested calls degrade to serial execution; the first exception thrown
/// by any chunk is rethrown on the calling thread.
void parallel_chunks(u64 begin, u64 end, const std::function<void(u64, u64)>& fn);

}  // namespace residua
