#ifndef IWTSTEG_BLOCKMATCH_HPP
#define IWTSTEG_BLOCKMATCH_HPP

#include <cstdint>
#include <vector>

#include "iwtsteg/plane.hpp"

namespace iwtsteg {

// Non-overlapping tiling of a plane, blocks numbered row-major.
struct BlockGrid {
    int source_rows = 0;
    int source_cols = 0;
    int block_size = 0;
    int blocks_per_col = 0;  // block count down the plane
    int blocks_per_row = 0;  // block count across the plane

    int block_count() const { return blocks_per_col * blocks_per_row; }
    int block_row(int k) const { return (k / blocks_per_row) * block_size; }
    int block_col(int k) const { return (k % blocks_per_row) * block_size; }

    friend bool operator==(const BlockGrid&, const BlockGrid&) = default;
};

// One cover-block address per secret block, row-major.
struct BlockKey {
    std::vector<std::uint32_t> entries;
    BlockGrid secret_grid;
    BlockGrid cover_grid;

    friend bool operator==(const BlockKey&, const BlockKey&) = default;
};

// Throws errc::dimension when block_size does not divide both dimensions.
BlockGrid partition(int rows, int cols, int block_size);
BlockGrid partition(const PixelPlane& plane, int block_size);

// sqrt of the mean squared elementwise difference; shapes must match.
double block_rmse(const PixelPlane& a, const PixelPlane& b);

// For every secret block, the address of the cover block with least RMSE.
// Exhaustive search; ties go to the lowest linear index. Comparison is done
// on exact integer squared sums, so results are bit-reproducible.
BlockKey build_key(const PixelPlane& secret_ll, const PixelPlane& cover_ll,
                   int block_size = 2);

// Assembles a plane of the secret grid's dimensions from addressed cover
// blocks. Throws errc::payload_corrupt on addresses outside the cover grid.
PixelPlane reconstruct_ll(const BlockKey& key, const PixelPlane& cover_ll);

} // namespace iwtsteg

#endif
