#include "entmon/path.hpp"

#include <algorithm>
#include <cmath>

#include "entmon/errors.hpp"

namespace entmon {

namespace {
using Cplx = std::complex<double>;

double segment_distance(Cplx p, Cplx a, Cplx b) {
    const Cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a) * std::conj(ab)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}
} // namespace

PathSpec PathSpec::circle(Cplx center, double radius, int orientation, double start_angle) {
    if (!(radius > 0.0)) throw validation_error("PathSpec::circle: radius must be positive");
    if (orientation != 1 && orientation != -1)
        throw validation_error("PathSpec::circle: orientation must be +1 or -1");
    PathSpec p;
    p.kind = Kind::Circle;
    p.center = center;
    p.radius = radius;
    p.orientation = orientation;
    p.start_angle = start_angle;
    return p;
}

PathSpec PathSpec::polyline(std::vector<Cplx> vertices, bool closed) {
    if (vertices.size() < 2)
        throw validation_error("PathSpec::polyline: need at least two vertices");
    PathSpec p;
    p.kind = Kind::Polyline;
    p.vertices = std::move(vertices);
    p.closed = closed;
    return p;
}

Cplx PathSpec::start() const {
    if (kind == Kind::Circle)
        return center + radius * std::polar(1.0, start_angle);
    return vertices.front();
}

double PathSpec::length() const {
    if (kind == Kind::Circle) return 2.0 * M_PI * radius;
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        len += std::abs(vertices[i + 1] - vertices[i]);
    if (closed) len += std::abs(vertices.front() - vertices.back());
    return len;
}

bool PathSpec::is_closed() const {
    if (kind == Kind::Circle) return true;
    return closed || std::abs(vertices.front() - vertices.back()) <= 1e-14;
}

PathSpec PathSpec::reversed() const {
    PathSpec p = *this;
    if (kind == Kind::Circle) {
        p.orientation = -orientation;
        return p;
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

std::vector<Cplx> PathSpec::waypoints(int loops) const {
    if (loops < 1) throw validation_error("PathSpec::waypoints: loops must be >= 1");
    if (!is_closed() && loops != 1)
        throw validation_error("PathSpec::waypoints: open path cannot loop");
    std::vector<Cplx> pts;
    if (kind == Kind::Circle) {
        const int n = std::max(16, static_cast<int>(std::ceil(length() * steps_per_unit_arc)));
        pts.reserve(static_cast<std::size_t>(n) * loops);
        for (int loop = 0; loop < loops; ++loop)
            for (int j = 1; j <= n; ++j) {
                const double a = start_angle + orientation * 2.0 * M_PI * j / n;
                pts.push_back(center + radius * std::polar(1.0, a));
            }
        return pts;
    }
    std::vector<Cplx> verts = vertices;
    if (closed && std::abs(verts.front() - verts.back()) > 1e-14) verts.push_back(verts.front());
    for (int loop = 0; loop < loops; ++loop) {
        for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
            const Cplx a = verts[i], b = verts[i + 1];
            const int n =
                std::max(1, static_cast<int>(std::ceil(std::abs(b - a) * steps_per_unit_arc)));
            for (int j = 1; j <= n; ++j) pts.push_back(a + (b - a) * (double(j) / n));
        }
    }
    return pts;
}

double PathSpec::distance_to(Cplx p) const {
    if (kind == Kind::Circle) return std::abs(std::abs(p - center) - radius);
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        dist = std::min(dist, segment_distance(p, vertices[i], vertices[i + 1]));
    if (closed) dist = std::min(dist, segment_distance(p, vertices.back(), vertices.front()));
    return dist;
}

} // namespace entmon
