#pragma once

#include "gamma1/levi.hpp"
#include "gamma1/weyl.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gamma1 {

// Alcoves of GL_3 drawn in the plane x_1 + x_2 + x_3 = 0 (orthogonal projection).
struct AlcovePolygon {
    enum class Fill { Outline, Admissible, Dark };
    ExtAffElem w;
    std::vector<std::pair<double, double>> corners;  // images of the base-alcove vertices
    Fill fill = Fill::Outline;
    bool base = false;   // w stabilizes the base alcove
    std::string label;   // k_{O_nu}(w) for dark alcoves
};

struct AlcovePicture {
    LeviDatum levi;
    int nu_index = 0;
    std::vector<AlcovePolygon> alcoves;                 // outlines first, then Adm(mu_0) in sorted order
    std::vector<std::pair<double, double>> marked;      // the W mu_0 vertices e_1, e_2, e_3
    int shaded() const;
    int dark() const;
};

// Adm(mu_0) shaded, Adm(O_nu) = Adm^M(nu) dark and labelled with k_{O_nu}.
// Throws std::invalid_argument unless rank 3; nu_index must be the least
// index of its block.
AlcovePicture alcove_picture(const LeviDatum& L, int nu_index);
// Deterministic SVG text for the picture.
std::string render_svg(const AlcovePicture& pic);
std::string render_alcove_figure(const LeviDatum& L, int nu_index);

}  // namespace gamma1
