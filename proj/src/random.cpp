#include "mband/random.hpp"

#include "mband/normal.hpp"

namespace mband {

double RandomStream::next_normal() noexcept { return normal_quantile(next_uniform()); }

}  // namespace mband
