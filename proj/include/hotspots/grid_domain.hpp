#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hotspots::pde {

/// Grid cell (column i along x, row j along y).
struct Cell {
  int i = 0;
  int j = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Rasterized planar domain: cell (i, j) has center ((i+0.5)h, (j+0.5)h) and
/// is part of D when its mask entry is set. Construction enforces a
/// 4-connected interior spanning at least 9x9 cells.
class GridDomain {
 public:
  static constexpr int kMinSpan = 9;

  GridDomain(std::string name, int nx, int ny, double h, std::vector<std::uint8_t> mask);

  const std::string& name() const noexcept { return name_; }
  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  double h() const noexcept { return h_; }

  std::size_t index(Cell c) const noexcept { return static_cast<std::size_t>(c.j) * nx_ + c.i; }
  bool contains(Cell c) const noexcept {
    return c.i >= 0 && c.j >= 0 && c.i < nx_ && c.j < ny_ && mask_[index(c)] != 0;
  }
  // Inside cell with at least one of its four neighbors outside D.
  bool is_boundary(Cell c) const noexcept;

  std::size_t cell_count() const noexcept { return cell_count_; }
  std::size_t boundary_count() const noexcept { return boundary_count_; }
  double area() const noexcept { return h_ * h_ * static_cast<double>(cell_count_); }
  const std::vector<std::uint8_t>& mask() const noexcept { return mask_; }

  /// Inside cell closest to the centroid of D (lowest row-major index on ties).
  Cell central_cell() const;

  /// Serialize in the `hotspots-mask v1` text format.
  std::string to_mask_text() const;

 private:
  std::string name_;
  int nx_;
  int ny_;
  double h_;
  std::vector<std::uint8_t> mask_;
  std::size_t cell_count_ = 0;
  std::size_t boundary_count_ = 0;
};

/// Parse the mask format:
///   line 1  `hotspots-mask v1`
///   line 2  `h <positive decimal>`
///   then equal-length rows of '#' (inside) and '.' (outside); row k is j = k.
/// LF or CRLF; trailing whitespace ignored. Throws ValidationError naming the line.
GridDomain load_domain(std::string_view text, std::string name = "mask");

struct Rectangle {
  double a;
  double b;
};
struct Disk {
  double r;
};
struct Annulus {
  double r_in;
  double r_out;
};
// Two square chambers of side `chamber` joined along x by a neck of width
// `neck_w` and length `neck_len`; each chamber has a centered square hole of
// half-side `hole_r`.
struct Dumbbell {
  double chamber;
  double neck_w;
  double neck_len;
  double hole_r;
};
using Shape = std::variant<Rectangle, Disk, Annulus, Dumbbell>;

/// Parse generator syntax: `rectangle:2,1`, `disk:1`, `annulus:0.5,1`,
/// `dumbbell:1,0.1,0.5,0.25`.
Shape parse_shape(std::string_view spec);
std::string shape_name(const Shape& shape);

GridDomain make_domain(const Shape& shape, double h);

}  // namespace hotspots::pde
