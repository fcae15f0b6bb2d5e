#include "hotspots/grid_domain.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "hotspots/errors.hpp"

namespace hotspots::pde {

namespace {

constexpr int kDi[4] = {1, -1, 0, 0};
constexpr int kDj[4] = {0, 0, 1, -1};

bool four_connected(int nx, int ny, const std::vector<std::uint8_t>& mask, std::size_t count) {
  const auto first = std::find(mask.begin(), mask.end(), std::uint8_t{1});
  if (first == mask.end()) return false;
  std::vector<std::uint8_t> seen(mask.size(), 0);
  std::queue<std::size_t> pending;
  const auto start = static_cast<std::size_t>(first - mask.begin());
  pending.push(start);
  seen[start] = 1;
  std::size_t reached = 0;
  while (!pending.empty()) {
    const std::size_t k = pending.front();
    pending.pop();
    ++reached;
    const int i = static_cast<int>(k % nx);
    const int j = static_cast<int>(k / nx);
    for (int n = 0; n < 4; ++n) {
      const int ii = i + kDi[n];
      const int jj = j + kDj[n];
      if (ii < 0 || jj < 0 || ii >= nx || jj >= ny) continue;
      const std::size_t kk = static_cast<std::size_t>(jj) * nx + ii;
      if (mask[kk] && !seen[kk]) {
        seen[kk] = 1;
        pending.push(kk);
      }
    }
  }
  return reached == count;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(trim_right(text.substr(0, nl)));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

double parse_number(std::string_view s, std::string_view what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw ValidationError("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

int cells_for(double length, double h) {
  const double n = std::ceil(length / h - 1e-9);
  if (n > 1e5) throw ValidationError("grid too large: " + std::to_string(n) + " cells along one axis");
  return static_cast<int>(n);
}

template <typename Inside>
GridDomain rasterize(std::string name, double width, double height, double h, Inside&& inside) {
  const int nx = cells_for(width, h);
  const int ny = cells_for(height, h);
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(nx) * ny, 0);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      mask[static_cast<std::size_t>(j) * nx + i] = inside((i + 0.5) * h, (j + 0.5) * h) ? 1 : 0;
    }
  }
  return GridDomain(std::move(name), nx, ny, h, std::move(mask));
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string(what) + " must be positive");
}

}  // namespace

GridDomain::GridDomain(std::string name, int nx, int ny, double h, std::vector<std::uint8_t> mask)
    : name_(std::move(name)), nx_(nx), ny_(ny), h_(h), mask_(std::move(mask)) {
  if (!(h_ > 0.0) || !std::isfinite(h_)) throw ValidationError("grid spacing h must be positive");
  if (nx_ <= 0 || ny_ <= 0 || mask_.size() != static_cast<std::size_t>(nx_) * ny_) {
    throw ValidationError("mask dimensions do not match " + std::to_string(nx_) + "x" + std::to_string(ny_));
  }
  int i_min = nx_, i_max = -1, j_min = ny_, j_max = -1;
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      auto& m = mask_[index({i, j})];
      m = m ? 1 : 0;
      if (!m) continue;
      ++cell_count_;
      i_min = std::min(i_min, i);
      i_max = std::max(i_max, i);
      j_min = std::min(j_min, j);
      j_max = std::max(j_max, j);
    }
  }
  if (cell_count_ == 0) throw ValidationError("domain '" + name_ + "' has no interior cells");
  if (i_max - i_min + 1 < kMinSpan || j_max - j_min + 1 < kMinSpan) {
    throw ValidationError("domain '" + name_ + "' spans " + std::to_string(i_max - i_min + 1) + "x" +
                          std::to_string(j_max - j_min + 1) + " cells, below the 9x9 minimum");
  }
  if (!four_connected(nx_, ny_, mask_, cell_count_)) {
    throw ValidationError("domain '" + name_ + "' interior is not 4-connected");
  }
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      if (contains({i, j}) && is_boundary({i, j})) ++boundary_count_;
    }
  }
}

bool GridDomain::is_boundary(Cell c) const noexcept {
  if (!contains(c)) return false;
  for (int n = 0; n < 4; ++n) {
    if (!contains({c.i + kDi[n], c.j + kDj[n]})) return true;
  }
  return false;
}

Cell GridDomain::central_cell() const {
  double cx = 0.0, cy = 0.0;
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      if (!contains({i, j})) continue;
      cx += i;
      cy += j;
    }
  }
  cx /= static_cast<double>(cell_count_);
  cy /= static_cast<double>(cell_count_);
  Cell best{};
  double best_dist = std::numeric_limits<double>::infinity();
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      if (!contains({i, j})) continue;
      const double dist = (i - cx) * (i - cx) + (j - cy) * (j - cy);
      if (dist < best_dist - 1e-12) {
        best_dist = dist;
        best = {i, j};
      }
    }
  }
  return best;
}

std::string GridDomain::to_mask_text() const {
  std::ostringstream os;
  os.precision(17);
  os << "hotspots-mask v1\nh " << h_ << '\n';
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) os << (contains({i, j}) ? '#' : '.');
    os << '\n';
  }
  return os.str();
}

GridDomain load_domain(std::string_view text, std::string name) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "hotspots-mask v1") {
    throw ValidationError("line 1: expected header 'hotspots-mask v1'");
  }
  if (lines.size() < 2 || lines[1].substr(0, 2) != "h ") {
    throw ValidationError("line 2: expected 'h <positive decimal>'");
  }
  std::string_view h_text = lines[1].substr(2);
  while (!h_text.empty() && h_text.front() == ' ') h_text.remove_prefix(1);
  double h = 0.0;
  try {
    h = parse_number(h_text, "grid spacing");
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("line 2: ") + e.what());
  }
  if (!(h > 0.0)) throw ValidationError("line 2: grid spacing must be positive");
  if (lines.size() < 3) throw ValidationError("line 3: mask has no rows");

  const std::size_t width = lines[2].size();
  const int ny = static_cast<int>(lines.size() - 2);
  std::vector<std::uint8_t> mask;
  mask.reserve(width * ny);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const std::string line_no = "line " + std::to_string(k + 1);
    if (lines[k].size() != width) {
      throw ValidationError(line_no + ": row length " + std::to_string(lines[k].size()) + " differs from " +
                            std::to_string(width));
    }
    for (const char c : lines[k]) {
      if (c != '#' && c != '.') throw ValidationError(line_no + ": unexpected character '" + std::string(1, c) + "'");
      mask.push_back(c == '#' ? 1 : 0);
    }
  }
  if (width == 0) throw ValidationError("line 3: empty mask row");
  return GridDomain(std::move(name), static_cast<int>(width), ny, h, std::move(mask));
}

Shape parse_shape(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ValidationError("generator spec '" + std::string(spec) + "' lacks ':'");
  const std::string_view kind = spec.substr(0, colon);
  std::vector<double> args;
  std::string_view rest = spec.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    args.push_back(parse_number(rest.substr(0, comma), "generator argument"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  const auto expect = [&](std::size_t n) {
    if (args.size() != n) {
      throw ValidationError("generator '" + std::string(kind) + "' takes " + std::to_string(n) + " arguments");
    }
  };
  if (kind == "rectangle") {
    expect(2);
    return Rectangle{args[0], args[1]};
  }
  if (kind == "disk") {
    expect(1);
    return Disk{args[0]};
  }
  if (kind == "annulus") {
    expect(2);
    return Annulus{args[0], args[1]};
  }
  if (kind == "dumbbell") {
    expect(4);
    return Dumbbell{args[0], args[1], args[2], args[3]};
  }
  throw ValidationError("unknown generator '" + std::string(kind) + "'");
}

std::string shape_name(const Shape& shape) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rectangle>) os << "rectangle:" << s.a << ',' << s.b;
        if constexpr (std::is_same_v<T, Disk>) os << "disk:" << s.r;
        if constexpr (std::is_same_v<T, Annulus>) os << "annulus:" << s.r_in << ',' << s.r_out;
        if constexpr (std::is_same_v<T, Dumbbell>)
          os << "dumbbell:" << s.chamber << ',' << s.neck_w << ',' << s.neck_len << ',' << s.hole_r;
      },
      shape);
  return os.str();
}

GridDomain make_domain(const Shape& shape, double h) {
  require_positive(h, "grid spacing h");
  const std::string name = shape_name(shape);
  return std::visit(
      [&](const auto& s) -> GridDomain {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rectangle>) {
          require_positive(s.a, "rectangle width");
          require_positive(s.b, "rectangle height");
          return rasterize(name, s.a, s.b, h, [&](double x, double y) { return x < s.a && y < s.b; });
        } else if constexpr (std::is_same_v<T, Disk>) {
          require_positive(s.r, "disk radius");
          return rasterize(name, 2 * s.r, 2 * s.r, h, [&](double x, double y) {
            return (x - s.r) * (x - s.r) + (y - s.r) * (y - s.r) < s.r * s.r;
          });
        } else if constexpr (std::is_same_v<T, Annulus>) {
          require_positive(s.r_in, "annulus inner radius");
          require_positive(s.r_out, "annulus outer radius");
          if (s.r_in >= s.r_out) throw ValidationError("annulus inner radius must be below the outer radius");
          return rasterize(name, 2 * s.r_out, 2 * s.r_out, h, [&](double x, double y) {
            const double rho2 = (x - s.r_out) * (x - s.r_out) + (y - s.r_out) * (y - s.r_out);
            return rho2 >= s.r_in * s.r_in && rho2 < s.r_out * s.r_out;
          });
        } else {
          require_positive(s.chamber, "dumbbell chamber");
          require_positive(s.neck_w, "dumbbell neck width");
          require_positive(s.neck_len, "dumbbell neck length");
          require_positive(s.hole_r, "dumbbell hole radius");
          if (s.neck_w >= s.chamber) throw ValidationError("dumbbell neck must be narrower than the chamber");
          if (2 * s.hole_r >= s.chamber) throw ValidationError("dumbbell hole must be smaller than the chamber");
          const double c = s.chamber;
          const double right = c + s.neck_len;
          const auto in_chamber = [&](double x, double y, double x0) {
            if (x < x0 || x >= x0 + c || y >= c) return false;
            return std::abs(x - (x0 + 0.5 * c)) >= s.hole_r || std::abs(y - 0.5 * c) >= s.hole_r;
          };
          return rasterize(name, 2 * c + s.neck_len, c, h, [&](double x, double y) {
            if (in_chamber(x, y, 0.0) || in_chamber(x, y, right)) return true;
            return x >= c && x < right && std::abs(y - 0.5 * c) < 0.5 * s.neck_w;
          });
        }
      },
      shape);
}

}  // namespace hotspots::pde
