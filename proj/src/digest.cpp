#include "bml/digest.hpp"

namespace bml {

std::uint64_t grid_digest(const Grid& g) {
    std::uint64_t h = kFnvOffsetBasis;
    for (int r = 0; r < g.n(); ++r) {
        for (int c = 0; c < g.n(); ++c) {
            h ^= static_cast<std::uint8_t>(g.interior(r, c));
            h *= kFnvPrime;
        }
    }
    return h;
}

}  // namespace bml
