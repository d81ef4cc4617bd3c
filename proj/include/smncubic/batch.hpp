#pragma once

#include <cstddef>
#include <iosfwd>

#include "smncubic/classify.hpp"

namespace smncubic {

struct BatchSummary {
  std::size_t records = 0;  // emitted output lines (reports + error objects)
  std::size_t errors = 0;   // parse-error records
};

/// Read CSV rows a,b,c from `in` (header optional, '#' comments, blank lines
/// skipped) and write one JSON report per data row to `out`, in input order.
/// Rows that fail to parse become {"line_no":.., "reason":..} objects and never
/// abort the batch.  Records are solved concurrently on up to `threads` workers
/// (0 = hardware concurrency); the writer serialises in input order.
BatchSummary run_batch(std::istream& in, std::ostream& out,
                       double tol = kDefaultClassifyTol, unsigned threads = 0);

}  // namespace smncubic
