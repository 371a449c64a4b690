#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sieveball {

struct WorldPoint {
  double x = 0;  // metres east
  double y = 0;  // metres north
};

struct Segment {
  WorldPoint a;
  WorldPoint b;
};

// Rings of vertices; rings[0] is the outer boundary, further rings are holes.
// Containment is even-odd over all rings, so holes need no special casing.
struct Polygon {
  std::vector<std::vector<WorldPoint>> rings;
};

// Regular sampling lattice. Node index = row * cols + col (raster scan
// order); cell centres sit at origin + (col + 0.5, row + 0.5) * spacing.
struct GridSpec {
  WorldPoint origin;  // min-x / min-y corner
  double spacing = 0;
  uint32_t rows = 0;
  uint32_t cols = 0;

  uint64_t cell_count() const { return uint64_t{rows} * cols; }
  uint64_t cell_index(uint32_t row, uint32_t col) const { return uint64_t{row} * cols + col; }
  uint32_t cell_row(uint64_t cell) const { return static_cast<uint32_t>(cell / cols); }
  uint32_t cell_col(uint64_t cell) const { return static_cast<uint32_t>(cell % cols); }
  WorldPoint cell_center(uint32_t row, uint32_t col) const {
    return {origin.x + (col + 0.5) * spacing, origin.y + (row + 0.5) * spacing};
  }
};

// Active cells (open space) with a dense raster-ordered renumbering.
struct NodeSet {
  std::vector<uint8_t> active;         // one flag per grid cell
  std::vector<uint32_t> node_of_cell;  // UINT32_MAX for inactive cells
  std::vector<uint32_t> cell_of_node;

  uint32_t node_count() const { return static_cast<uint32_t>(cell_of_node.size()); }
  bool is_active(uint64_t cell) const { return active[cell] != 0; }
};

// Per-cell bins of obstacle segment indices, CSR layout over rows*cols cells.
// A segment is binned into every cell whose closed rectangle it touches.
struct ObstacleRaster {
  std::vector<Segment> segments;
  std::vector<uint32_t> bin_offsets;  // cell_count + 1
  std::vector<uint32_t> bin_entries;  // segment indices

  std::span<const uint32_t> bin(uint64_t cell) const {
    return {bin_entries.data() + bin_offsets[cell],
            bin_entries.data() + bin_offsets[cell + 1]};
  }
};

// Even-odd (crossing number) containment with the half-open edge rule:
// each edge counts crossings for y in [min(ay,by), max(ay,by)).
bool point_in_polygon(const WorldPoint& p, const Polygon& poly);

// Unsigned shoelace area of the outer ring.
double polygon_area(const Polygon& poly);

// Cells are active iff their centre lies inside `boundary` and inside no
// building. Throws std::invalid_argument for a degenerate boundary and
// std::runtime_error when no cell is active.
std::pair<GridSpec, NodeSet> generate_grid(const Polygon& boundary,
                                           const std::vector<Polygon>& buildings,
                                           double spacing);

// Decomposes every polygon edge into a Segment and bins it into all grid
// cells whose closed rectangle the segment intersects (conservative
// supercover).
ObstacleRaster rasterize_obstacles(const std::vector<Polygon>& buildings,
                                   const GridSpec& grid);

}  // namespace sieveball
