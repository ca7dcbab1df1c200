#ifndef ENTMON_PATH_HPP
#define ENTMON_PATH_HPP

#include <complex>
#include <vector>

namespace entmon {

/// Path in the complex lambda_1 plane. Circles are always closed; a
/// polyline is closed when its closed flag is set (an implicit edge
/// back to the first vertex).
struct PathSpec {
    enum class Kind { Circle, Polyline };

    Kind kind = Kind::Circle;

    // Circle parameters.
    std::complex<double> center{0.0, 0.0};
    double radius = 0.0;
    int orientation = +1; // +1 counterclockwise, -1 clockwise
    double start_angle = 0.0;

    // Polyline parameters.
    std::vector<std::complex<double>> vertices;
    bool closed = false;

    int steps_per_unit_arc = 1024;

    static PathSpec circle(std::complex<double> center, double radius, int orientation = +1,
                           double start_angle = 0.0);
    static PathSpec polyline(std::vector<std::complex<double>> vertices, bool closed);

    std::complex<double> start() const;
    double length() const;
    bool is_closed() const;

    /// Path with the same geometry traversed backwards.
    PathSpec reversed() const;

    /// Discretized waypoints after the start point, `loops` full
    /// traversals for closed paths (one traversal otherwise).
    std::vector<std::complex<double>> waypoints(int loops = 1) const;

    /// Exact distance from a point to the path's geometric image.
    double distance_to(std::complex<double> p) const;
};

} // namespace entmon

#endif
