#include "mspec/render.hpp"

#include <sstream>

namespace mspec {

Json json_of(const Mat2& m) {
    return Json::array({Json::array({dec(m.a), dec(m.c)}), Json::array({dec(m.b), dec(m.d)})});
}

Json json_of(const QuadForm& f) {
    Json j;
    j["A"] = dec(f.A);
    j["B"] = dec(f.B);
    j["C"] = dec(f.C);
    return j;
}

Json json_of(const RadicalRatio& r, unsigned digits) {
    Json j;
    j["N"] = dec(r.N);
    j["d"] = dec(r.d);
    j["decimal"] = r.to_decimal(digits);
    return j;
}

Json json_of(const Surd& s, unsigned digits) {
    Json j;
    j["surd"] = s.to_string();
    j["decimal"] = s.to_decimal(digits);
    return j;
}

Json json_of(const FareyCode& c) {
    Json j = Json::array();
    for (long r : c.runs) j.push_back(r);
    return j;
}

Json json_of(const Point& p) { return Json::array({dec(p.first), dec(p.second)}); }

std::string rat_str(const Rat& r) {
    return dec(Int(r.get_num())) + "/" + dec(Int(r.get_den()));
}

std::string sail_svg(const SailPolyline& p, const Cone& c) {
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    for (auto& v : p.vertices) {
        minx = std::min(minx, v.first.get_d());
        maxx = std::max(maxx, v.first.get_d());
        miny = std::min(miny, v.second.get_d());
        maxy = std::max(maxy, v.second.get_d());
    }
    double w = 640, h = 640, pad = 20;
    double sx = (w - 2 * pad) / std::max(1.0, maxx - minx);
    double sy = (h - 2 * pad) / std::max(1.0, maxy - miny);
    double s = std::min(sx, sy);
    auto X = [&](double x) { return pad + (x - minx) * s; };
    auto Y = [&](double y) { return h - pad - (y - miny) * s; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\">\n";
    double hi = std::stod(c.high.to_decimal(12));
    double lo = std::stod(c.low.to_decimal(12));
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(maxx) << "\" y2=\""
       << Y(maxx * hi) << "\" stroke=\"#999\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(maxx) << "\" y2=\""
       << Y(maxx * lo) << "\" stroke=\"#999\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"#c33\" stroke-width=\"1.5\" points=\"";
    for (auto& v : p.vertices) os << X(v.first.get_d()) << "," << Y(v.second.get_d()) << " ";
    os << "\"/>\n";
    for (auto& v : p.vertices)
        os << "<circle cx=\"" << X(v.first.get_d()) << "\" cy=\"" << Y(v.second.get_d())
           << "\" r=\"2.5\" fill=\"#36c\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace mspec
