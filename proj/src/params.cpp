#include "spanner/params.hpp"

#include <stdexcept>

namespace spanner {

void SpannerParams::validate() const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (f < 0) throw std::invalid_argument("f must be nonnegative");
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  if (r < d) throw std::invalid_argument("r must be at least d");
}

}  // namespace spanner
