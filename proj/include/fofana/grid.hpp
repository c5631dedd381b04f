#ifndef FOFANA_GRID_HPP
#define FOFANA_GRID_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fofana {

// Uniform periodic grid on the box [-side/2, side/2)^dim, sampled at
// samples_per_unit points per unit length. User grids (make_grid) have an
// even side; grids derived by dyadic rescaling may have any side >= 1, in
// which case the unit-cube partition lives on the torus with the first cube
// anchored at the box corner.
struct GridSpec {
    int dim = 1;
    int side = 2;              // L
    int samples_per_unit = 2;  // m, a power of two (>= 1 on derived grids)

    double spacing() const { return 1.0 / samples_per_unit; }
    int points_per_axis() const { return side * samples_per_unit; }
    std::size_t point_count() const {
        std::size_t n = static_cast<std::size_t>(points_per_axis());
        return dim == 1 ? n : n * n;
    }
    std::size_t cube_count() const {
        return dim == 1 ? static_cast<std::size_t>(side)
                        : static_cast<std::size_t>(side) * static_cast<std::size_t>(side);
    }
    double coord(int i) const { return -0.5 * side + i * spacing(); }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

GridSpec make_grid(int dim, int side, int samples_per_unit);

class GridFunction {
public:
    GridFunction(GridSpec spec, std::vector<double> values);

    const GridSpec& spec() const { return spec_; }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    // d=2 row-major access: index = i0 * n + i1
    double at(int i0, int i1) const {
        return values_[static_cast<std::size_t>(i0) * spec_.points_per_axis() + i1];
    }

private:
    GridSpec spec_;
    std::vector<double> values_;
};

// Point evaluator; for dim = 1 the second coordinate is 0.
using PointFunction = std::function<double(double, double)>;

GridFunction sample(const PointFunction& f, const GridSpec& spec);
GridFunction zero_function(const GridSpec& spec);
GridFunction constant_function(const GridSpec& spec, double c);

// The side^dim unit-cube index blocks, lexicographic in the cube index, each
// of exactly samples_per_unit^dim points; together they partition the grid.
std::vector<std::vector<std::size_t>> cube_slices(const GridSpec& spec);

// Second-order central difference with periodic wraparound.
GridFunction partial_derivative(const GridFunction& u, int axis);

// Exact dyadic rescaling of the coordinate system: (side, m) -> (side*factor,
// m/factor) with the sample array unchanged, so the result represents
// x -> u(x/factor) with no interpolation. The total point count side*m is
// invariant; factor must keep side*factor and m/factor integral (>= 1), i.e.
// factor in [1/side, m].
GridFunction resample_dyadic(const GridFunction& u, double factor);

bool resample_representable(const GridSpec& spec, double factor);

// Finite geometric ladder {base * ratio^k : 0 <= k < count} standing in for
// continuous suprema over scales.
struct Ladder {
    double base = 1.0;
    double ratio = 2.0;
    int count = 1;

    Ladder() = default;
    Ladder(double base_, double ratio_, int count_);

    std::vector<double> members() const;
    Ladder scaled(double factor) const { return Ladder(base * factor, ratio, count); }
    // Same span, square-root ratio: keeps every original member and inserts
    // one between each adjacent pair.
    Ladder refined() const;

    static Ladder dyadic(int lo_pow2, int hi_pow2);
};

}  // namespace fofana

#endif
