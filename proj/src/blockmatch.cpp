#include "iwtsteg/blockmatch.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace iwtsteg {

BlockGrid partition(int rows, int cols, int block_size) {
    if (block_size <= 0)
        raise(errc::dimension, "block size must be positive");
    if (rows <= 0 || cols <= 0)
        raise(errc::dimension, "cannot partition an empty plane");
    if (rows % block_size != 0 || cols % block_size != 0)
        raise(errc::dimension, "block size does not divide the plane dimensions");
    return BlockGrid{rows, cols, block_size, rows / block_size, cols / block_size};
}

BlockGrid partition(const PixelPlane& plane, int block_size) {
    return partition(plane.rows(), plane.cols(), block_size);
}

double block_rmse(const PixelPlane& a, const PixelPlane& b) {
    if (!a.same_dims(b))
        raise(errc::dimension, "block_rmse: shape mismatch");
    if (a.empty())
        raise(errc::dimension, "block_rmse: empty blocks");
    std::int64_t sum = 0;
    const auto& da = a.data();
    const auto& db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(da[i]) - db[i];
        sum += d * d;
    }
    return std::sqrt(static_cast<double>(sum) / static_cast<double>(da.size()));
}

namespace {

// squared error between two 2x2 blocks given their top-left anchors
inline std::int64_t sse2x2(const PixelPlane& a, int ar, int ac,
                           const PixelPlane& b, int br, int bc) {
    std::int64_t d0 = a.at(ar, ac) - b.at(br, bc);
    std::int64_t d1 = a.at(ar, ac + 1) - b.at(br, bc + 1);
    std::int64_t d2 = a.at(ar + 1, ac) - b.at(br + 1, bc);
    std::int64_t d3 = a.at(ar + 1, ac + 1) - b.at(br + 1, bc + 1);
    return d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3;
}

std::int64_t sse_block(const PixelPlane& a, int ar, int ac,
                       const PixelPlane& b, int br, int bc, int size) {
    if (size == 2) return sse2x2(a, ar, ac, b, br, bc);
    std::int64_t sum = 0;
    for (int i = 0; i < size; ++i) {
        const std::int32_t* pa = a.row(ar + i) + ac;
        const std::int32_t* pb = b.row(br + i) + bc;
        for (int j = 0; j < size; ++j) {
            std::int64_t d = static_cast<std::int64_t>(pa[j]) - pb[j];
            sum += d * d;
        }
    }
    return sum;
}

} // namespace

BlockKey build_key(const PixelPlane& secret_ll, const PixelPlane& cover_ll, int block_size) {
    BlockGrid sg = partition(secret_ll, block_size);
    BlockGrid cg = partition(cover_ll, block_size);

    BlockKey key;
    key.secret_grid = sg;
    key.cover_grid = cg;
    key.entries.resize(static_cast<std::size_t>(sg.block_count()));

    const int nc = cg.block_count();
    for (int s = 0; s < sg.block_count(); ++s) {
        const int sr = sg.block_row(s), sc = sg.block_col(s);
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        int best_idx = 0;
        for (int c = 0; c < nc; ++c) {
            std::int64_t e = sse_block(secret_ll, sr, sc, cover_ll,
                                       cg.block_row(c), cg.block_col(c), block_size);
            if (e < best) {  // strict: ties keep the lowest index
                best = e;
                best_idx = c;
                if (e == 0) break;
            }
        }
        key.entries[static_cast<std::size_t>(s)] = static_cast<std::uint32_t>(best_idx);
    }
    return key;
}

PixelPlane reconstruct_ll(const BlockKey& key, const PixelPlane& cover_ll) {
    const BlockGrid& sg = key.secret_grid;
    const BlockGrid& cg = key.cover_grid;
    BlockGrid actual = partition(cover_ll, cg.block_size);
    if (actual != cg)
        raise(errc::dimension, "reconstruct_ll: cover plane does not match the key's grid");
    if (key.entries.size() != static_cast<std::size_t>(sg.block_count()))
        raise(errc::payload_corrupt, "reconstruct_ll: entry count does not match the secret grid");

    PixelPlane out(sg.source_rows, sg.source_cols);
    const int bs = sg.block_size;
    for (int s = 0; s < sg.block_count(); ++s) {
        std::uint32_t e = key.entries[static_cast<std::size_t>(s)];
        if (e >= static_cast<std::uint32_t>(cg.block_count()))
            raise(errc::payload_corrupt, "reconstruct_ll: block address out of range");
        const int sr = sg.block_row(s), sc = sg.block_col(s);
        const int cr = cg.block_row(static_cast<int>(e)), cc = cg.block_col(static_cast<int>(e));
        for (int i = 0; i < bs; ++i)
            for (int j = 0; j < bs; ++j)
                out.at(sr + i, sc + j) = cover_ll.at(cr + i, cc + j);
    }
    return out;
}

} // namespace iwtsteg
