#include <cstdint>
#include <cstring>

#include "bml/engine.hpp"

// Lane-parallel select-and-mask kernels. Comparisons produce all-ones or
// all-zeros per byte lane, and `cond ? x : y` becomes (C & x) | (~C & y), so
// the whole phase runs on lane-wise compares and AND/OR/NOT only. Primary
// path: compiler vector extensions (one unaligned W-byte vector per load).
// Fallback: the same formulation over pairs of 64-bit words.

#if defined(__GNUC__) || defined(__clang__)
#define BML_HAVE_VECTOR_EXT 1
#else
#define BML_HAVE_VECTOR_EXT 0
#endif

namespace bml::detail {

namespace {

constexpr std::uint8_t kEmptyByte = static_cast<std::uint8_t>(Cell::Empty);
constexpr std::uint8_t kLrByte = static_cast<std::uint8_t>(Cell::LR);
constexpr std::uint8_t kTbByte = static_cast<std::uint8_t>(Cell::TB);

#if BML_HAVE_VECTOR_EXT

#if defined(__AVX2__)
constexpr int kVecWidth = 32;
#else
constexpr int kVecWidth = 16;
#endif

using vec = signed char __attribute__((vector_size(kVecWidth)));

inline vec vload(const Cell* p) {
    vec v;
    std::memcpy(&v, p, sizeof v);
    return v;
}

inline void vstore(Cell* p, vec v) { std::memcpy(p, &v, sizeof v); }

inline vec vsplat(std::uint8_t b) {
    vec v;
    std::memset(&v, b, sizeof v);
    return v;
}

// next states of W adjacent cells: prev = upstream neighbor lane (left/top),
// succ = downstream (right/bottom), moving = the species this phase advances
inline vec lane_rule(vec prev, vec center, vec succ, vec moving, vec empty) {
    const vec mask_move = (prev == moving) & (center == empty);
    const vec mask_vacate = (center == moving) & (succ == empty);
    const vec mask_center = ~(mask_move | mask_vacate);
    return (mask_move & moving) | (mask_vacate & empty) | (mask_center & center);
}

void lanes_phase_vec(const Grid& cur, Grid& next, Phase phase) {
    const int n = cur.n();
    const int stride = cur.stride();
    const Cell* src = cur.data();
    Cell* dst = next.data();
    const bool horizontal = phase == Phase::Horizontal;
    const vec moving = vsplat(horizontal ? kLrByte : kTbByte);
    const vec empty = vsplat(kEmptyByte);

    for (int i = 1; i <= n; ++i) {
        const Cell* row = src + idx(i, 0, stride);
        const Cell* prev_base = horizontal ? row - 1 : src + idx(i - 1, 0, stride);
        const Cell* succ_base = horizontal ? row + 1 : src + idx(i + 1, 0, stride);
        Cell* out = dst + idx(i, 0, stride);

        int j = 1;
        for (; j + kVecWidth - 1 <= n; j += kVecWidth) {
            const vec prev = vload(prev_base + j);
            const vec center = vload(row + j);
            const vec succ = vload(succ_base + j);
            vstore(out + j, lane_rule(prev, center, succ, moving, empty));
        }
        // scalar remainder: the final n mod W cells of the row
        if (horizontal) {
            for (; j <= n; ++j) out[j] = horizontal_rule(row[j - 1], row[j], row[j + 1]);
        } else {
            for (; j <= n; ++j) out[j] = vertical_rule(prev_base[j], row[j], succ_base[j]);
        }
    }
}

#endif  // BML_HAVE_VECTOR_EXT

// --- two-word SWAR fallback: 16 byte lanes per iteration ------------------

constexpr int kSwarWidth = 16;
constexpr std::uint64_t kLowBits = 0x0101010101010101ull;
constexpr std::uint64_t kHighBits = 0x8080808080808080ull;

inline std::uint64_t wload(const Cell* p) {
    std::uint64_t v;
    std::memcpy(&v, p, sizeof v);
    return v;
}

inline void wstore(Cell* p, std::uint64_t v) { std::memcpy(p, &v, sizeof v); }

inline std::uint64_t wsplat(std::uint8_t b) { return kLowBits * b; }

// 0xFF in every byte lane where the lanes of a and b are equal. The low-7-bit
// sum sets a lane's high bit iff those bits are nonzero and cannot carry into
// the next lane; OR-ing d back in catches lanes that differ only in bit 7.
inline std::uint64_t weq(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t d = a ^ b;
    const std::uint64_t nonzero = ((d & ~kHighBits) + ~kHighBits) | d;
    return ((~nonzero & kHighBits) >> 7) * 0xFFull;
}

inline std::uint64_t word_rule(std::uint64_t prev, std::uint64_t center, std::uint64_t succ,
                               std::uint64_t moving, std::uint64_t empty) {
    const std::uint64_t mask_move = weq(prev, moving) & weq(center, empty);
    const std::uint64_t mask_vacate = weq(center, moving) & weq(succ, empty);
    const std::uint64_t mask_center = ~(mask_move | mask_vacate);
    return (mask_move & moving) | (mask_vacate & empty) | (mask_center & center);
}

}  // namespace

void swar_phase(const Grid& cur, Grid& next, Phase phase) {
    const int n = cur.n();
    const int stride = cur.stride();
    const Cell* src = cur.data();
    Cell* dst = next.data();
    const bool horizontal = phase == Phase::Horizontal;
    const std::uint64_t moving = wsplat(horizontal ? kLrByte : kTbByte);
    const std::uint64_t empty = wsplat(kEmptyByte);

    for (int i = 1; i <= n; ++i) {
        const Cell* row = src + idx(i, 0, stride);
        const Cell* prev_base = horizontal ? row - 1 : src + idx(i - 1, 0, stride);
        const Cell* succ_base = horizontal ? row + 1 : src + idx(i + 1, 0, stride);
        Cell* out = dst + idx(i, 0, stride);

        int j = 1;
        for (; j + kSwarWidth - 1 <= n; j += kSwarWidth) {
            for (int w = 0; w < kSwarWidth; w += 8) {
                const std::uint64_t prev = wload(prev_base + j + w);
                const std::uint64_t center = wload(row + j + w);
                const std::uint64_t succ = wload(succ_base + j + w);
                wstore(out + j + w, word_rule(prev, center, succ, moving, empty));
            }
        }
        if (horizontal) {
            for (; j <= n; ++j) out[j] = horizontal_rule(row[j - 1], row[j], row[j + 1]);
        } else {
            for (; j <= n; ++j) out[j] = vertical_rule(prev_base[j], row[j], succ_base[j]);
        }
    }
}

void lanes_phase(const Grid& cur, Grid& next, Phase phase) {
#if BML_HAVE_VECTOR_EXT
    lanes_phase_vec(cur, next, phase);
#else
    swar_phase(cur, next, phase);
#endif
}

bool lanes_uses_vector_extensions() { return BML_HAVE_VECTOR_EXT != 0; }

}  // namespace bml::detail

namespace bml {

int lane_width() {
#if BML_HAVE_VECTOR_EXT
    return detail::kVecWidth;
#else
    return detail::kSwarWidth;
#endif
}

}  // namespace bml
