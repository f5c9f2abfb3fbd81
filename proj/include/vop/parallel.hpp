#ifndef VOP_PARALLEL_HPP
#define VOP_PARALLEL_HPP

#include <functional>

namespace vop {
namespace detail {

/// Runs fn(0..count-1) across up to `jobs` threads; fn(i) must be
/// independent per index.  The first worker exception is rethrown.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace detail
}  // namespace vop

#endif
