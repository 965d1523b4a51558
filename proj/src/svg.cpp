#include "cubepeel/svg.hpp"
#include "cubepeel/io.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

namespace cubepeel {

namespace {

double to_double(const Rat& r) { return r.convert_to<double>(); }

struct View {
    double cx, cy, half;  // square window
};

std::string header(const View& v) {
    std::ostringstream ss;
    ss << "<svg xmlns='http://www.w3.org/2000/svg' width='640' height='640' viewBox='"
       << v.cx - v.half << " " << v.cy - v.half << " " << 2 * v.half << " " << 2 * v.half
       << "'>\n<g transform='scale(1,-1) translate(0," << -2 * v.cy << ")'>\n";
    return ss.str();
}

std::string line_svg(const Hyperplane& h, const View& v, const std::string& color) {
    double nx = to_double(h.normal[0]), ny = to_double(h.normal[1]), o = to_double(h.offset);
    double q = nx * nx + ny * ny;
    double px = o * nx / q, py = o * ny / q;  // foot of the perpendicular
    double tx = -ny, ty = nx;
    double len = std::sqrt(q);
    tx /= len;
    ty /= len;
    double ext = 4 * v.half;
    std::ostringstream ss;
    ss << "<line x1='" << px - ext * tx << "' y1='" << py - ext * ty << "' x2='"
       << px + ext * tx << "' y2='" << py + ext * ty << "' stroke='" << color
       << "' stroke-width='" << v.half / 120 << "'/>\n";
    return ss.str();
}

std::string dot_svg(double x, double y, double r, const std::string& color) {
    std::ostringstream ss;
    ss << "<circle cx='" << x << "' cy='" << y << "' r='" << r << "' fill='" << color
       << "'/>\n";
    return ss.str();
}

const char* kPalette[] = {"#1b6ca8", "#c0392b", "#1e8449", "#9b59b6", "#d68910",
                          "#117a65", "#7f8c8d", "#2c3e50", "#a04000", "#5d6d7e"};

} // namespace

void write_sweep_svgs(const Arrangement& a, const CellEnumeration& enumeration,
                      const PeelingSequence& seq, const std::string& dir) {
    std::filesystem::create_directories(dir);
    if (a.ambient() != 2) {
        write_file(dir + "/README.txt",
                   "Sweep snapshots are rendered for planar arrangements only.\n");
        return;
    }

    View v{0.0, 0.0, 1.25};
    if (a.kind == GeometryKind::euclidean) {
        double lo = 1e300, hi = -1e300;
        for (const auto& [cell, point] : enumeration.map.representatives) {
            for (const Rat& c : point) {
                lo = std::min(lo, to_double(c));
                hi = std::max(hi, to_double(c));
            }
        }
        double half = std::max(1.0, (hi - lo) / 2 * 1.4);
        v = View{(lo + hi) / 2, (lo + hi) / 2, half};
    }

    auto frame = [&](int upto /* events already peeled */) {
        std::ostringstream ss;
        ss << header(v);
        if (a.kind == GeometryKind::klein_disk)
            ss << "<circle cx='0' cy='0' r='1' fill='none' stroke='black' stroke-width='"
               << v.half / 100 << "'/>\n";
        for (int i = 0; i < a.n(); ++i)
            ss << line_svg(a.planes[static_cast<std::size_t>(i)], v,
                           kPalette[static_cast<std::size_t>(i) % 10]);
        for (std::size_t e = 0; e < seq.events.size(); ++e) {
            const auto* point = enumeration.map.find(seq.events[e].vertex);
            if (!point) continue;
            double x = to_double((*point)[0]), y = to_double((*point)[1]);
            bool peeled = static_cast<int>(e) < upto;
            bool current = static_cast<int>(e) == upto - 1;
            ss << dot_svg(x, y, v.half / (current ? 30 : 60),
                          current ? "#e74c3c" : (peeled ? "#cccccc" : "#2c3e50"));
            ss << "<text x='" << x + v.half / 40 << "' y='" << y << "' font-size='"
               << v.half / 18 << "' transform='scale(1,-1) translate(0," << 2 * y
               << ")'>" << concept_to_string(seq.events[e].vertex, seq.n) << "</text>\n";
        }
        ss << "</g>\n</svg>\n";
        return ss.str();
    };

    write_file(dir + "/overview.svg", frame(0));
    for (std::size_t e = 1; e <= seq.events.size(); ++e) {
        char name[32];
        std::snprintf(name, sizeof(name), "/event_%03zu.svg", e);
        write_file(dir + name, frame(static_cast<int>(e)));
    }
}

} // namespace cubepeel
