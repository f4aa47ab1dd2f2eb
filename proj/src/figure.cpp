#include "gamma1/figure.hpp"

#include "gamma1/admissible.hpp"
#include "gamma1/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gamma1 {

namespace {

using Point = std::pair<double, double>;

// Orthonormal basis of the sum-zero plane: (1,-1,0)/sqrt2, (1,1,-2)/sqrt6.
Point project(const std::vector<int>& x) {
    double a = (x[0] - x[1]) / std::sqrt(2.0);
    double b = (x[0] + x[1] - 2.0 * x[2]) / std::sqrt(6.0);
    return {a, -b};  // SVG y grows downward
}

std::vector<Point> corners(const ExtAffElem& w) {
    std::vector<Point> out;
    for (int i = 0; i < 3; ++i) out.push_back(project(act_on_vertex(w, i)));
    return out;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
    return buf;
}

Point centroid(const std::vector<Point>& c) {
    double x = 0, y = 0;
    for (const auto& [a, b] : c) {
        x += a;
        y += b;
    }
    return {x / static_cast<double>(c.size()), y / static_cast<double>(c.size())};
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace

int AlcovePicture::shaded() const {
    return static_cast<int>(std::count_if(alcoves.begin(), alcoves.end(), [](const AlcovePolygon& a) {
        return a.fill != AlcovePolygon::Fill::Outline;
    }));
}

int AlcovePicture::dark() const {
    return static_cast<int>(std::count_if(alcoves.begin(), alcoves.end(), [](const AlcovePolygon& a) {
        return a.fill == AlcovePolygon::Fill::Dark;
    }));
}

AlcovePicture alcove_picture(const LeviDatum& L, int nu_index) {
    if (L.rank() != 3) throw std::invalid_argument("alcove picture: only GL_3 is drawn");
    std::vector<ExtAffElem> adm = adm_set(3);
    std::vector<ExtAffElem> dark = levi_adm(L, nu_index);
    std::vector<int> nu(3, 0);
    nu[static_cast<std::size_t>(nu_index)] = 1;
    HeckeElem k = HeckeAlgebra(L).k_mu(nu);
    if (k.support() != dark) throw std::logic_error("alcove picture: supp k^M_nu != Adm^M(nu)");

    AlcovePicture pic;
    pic.levi = L;
    pic.nu_index = nu_index;

    // surrounding alcoves of the same connected component (lambda sum 1)
    std::set<ExtAffElem> seen(adm.begin(), adm.end());
    std::vector<ExtAffElem> ring;
    std::vector<int> perm{0, 1, 2};
    do {
        for (int a = -2; a <= 3; ++a)
            for (int b = -2; b <= 3; ++b) {
                ExtAffElem w = ExtAffElem::make({a, b, 1 - a - b}, perm);
                if (seen.count(w)) continue;
                bool near = true;
                for (const Point& c : corners(w))
                    if (std::hypot(c.first, c.second) > 2.2) near = false;
                if (near) ring.push_back(w);
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(ring.begin(), ring.end());
    for (const ExtAffElem& w : ring) pic.alcoves.push_back({w, corners(w), AlcovePolygon::Fill::Outline, false, ""});

    const AffineWeyl& W = gl(3);
    for (const ExtAffElem& w : adm) {
        AlcovePolygon a{w, corners(w), AlcovePolygon::Fill::Admissible, W.length(w) == 0, ""};
        if (std::binary_search(dark.begin(), dark.end(), w)) {
            a.fill = AlcovePolygon::Fill::Dark;
            a.label = k.coeff(w).str();
        }
        pic.alcoves.push_back(std::move(a));
    }
    for (int j = 0; j < 3; ++j) {
        std::vector<int> e(3, 0);
        e[static_cast<std::size_t>(j)] = 1;
        pic.marked.push_back(project(e));
    }
    return pic;
}

std::string render_svg(const AlcovePicture& pic) {
    const double scale = 120.0, half = 2.4;
    auto X = [&](double x) { return fmt((x + half) * scale); };
    auto Y = [&](double y) { return fmt((y + half) * scale); };
    std::ostringstream os;
    std::string size = fmt(2 * half * scale);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
       << size << ' ' << size << "\">\n";
    os << "  <title>Adm(mu_0) for GL_3, Levi " << pic.levi.str() << ", nu = e_" << pic.nu_index + 1 << "</title>\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const AlcovePolygon& a : pic.alcoves) {
        const char* fill = a.fill == AlcovePolygon::Fill::Dark ? "#555555"
                           : a.fill == AlcovePolygon::Fill::Admissible ? "#c8c8c8"
                                                                         : "none";
        const char* cls = a.fill == AlcovePolygon::Fill::Dark ? "dark"
                          : a.fill == AlcovePolygon::Fill::Admissible ? "admissible"
                                                                        : "outline";
        os << "  <polygon class=\"" << cls << "\" data-w=\"" << escape(a.w.str()) << "\" points=\"";
        for (std::size_t i = 0; i < a.corners.size(); ++i)
            os << (i ? " " : "") << X(a.corners[i].first) << ',' << Y(a.corners[i].second);
        os << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"" << (a.fill == AlcovePolygon::Fill::Outline ? "0.5" : "1.2")
           << "\"/>\n";
    }
    for (const AlcovePolygon& a : pic.alcoves) {
        Point c = centroid(a.corners);
        double dy = 0;
        if (a.base) {
            os << "  <text x=\"" << X(c.first) << "\" y=\"" << Y(c.second - 0.06) << "\" font-size=\"16\" text-anchor=\"middle\" fill=\""
               << (a.fill == AlcovePolygon::Fill::Dark ? "white" : "black") << "\">&#964;</text>\n";
            dy = 0.12;
        }
        if (!a.label.empty())
            os << "  <text x=\"" << X(c.first) << "\" y=\"" << Y(c.second + dy + 0.03) << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"white\">"
               << escape(a.label) << "</text>\n";
    }
    for (const Point& m : pic.marked)
        os << "  <circle class=\"vertex\" cx=\"" << X(m.first) << "\" cy=\"" << Y(m.second) << "\" r=\"5\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_alcove_figure(const LeviDatum& L, int nu_index) { return render_svg(alcove_picture(L, nu_index)); }

}  // namespace gamma1
