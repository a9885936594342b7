#include "exsim/action.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exsim {

namespace {

double decode_axis(int band, double offset, double patch_size) {
    return (static_cast<double>(2 * band + 1) + offset) * (patch_size * 0.5);
}

// Largest band whose lower boundary lies strictly below the coordinate, so
// boundary points land in the lower-index band.
int band_of(double coord, double patch_size, int bands) {
    int band = 0;
    for (int k = 1; k < bands; ++k) {
        if (coord > k * patch_size) band = k;
    }
    return band;
}

double encode_axis(double coord, int band, double patch_size) {
    const double half = patch_size * 0.5;
    const double s = static_cast<double>(2 * band + 1);
    double off = std::clamp(coord / half - s, -1.0, 1.0);

    // decode_axis is monotone in the offset; walk to the first offset whose
    // decode is >= coord, landing exactly on coord whenever it is decodable.
    for (int i = 0; i < 64 && decode_axis(band, off, patch_size) > coord; ++i) {
        off = std::nextafter(off, -2.0);
    }
    for (int i = 0; i < 64 && decode_axis(band, off, patch_size) < coord; ++i) {
        off = std::nextafter(off, 2.0);
    }
    if (decode_axis(band, off, patch_size) != coord) {
        const double lower = std::nextafter(off, -2.0);
        if (std::abs(decode_axis(band, lower, patch_size) - coord) <=
            std::abs(decode_axis(band, off, patch_size) - coord)) {
            off = lower;
        }
    }
    return std::clamp(off, -1.0, 1.0);
}

} // namespace

Vec2 decode_goal(const BiLevelAction& a, const PatchGrid& pg) {
    const int row = a.patch / pg.patches_per_side;
    const int col = a.patch % pg.patches_per_side;
    return {decode_axis(row, a.off_x, pg.patch_w), decode_axis(col, a.off_y, pg.patch_h)};
}

BiLevelAction encode_goal(const Vec2& p, const PatchGrid& pg) {
    const int n = pg.patches_per_side;
    if (p.x() < 0.0 || p.x() > n * pg.patch_w || p.y() < 0.0 || p.y() > n * pg.patch_h) {
        throw std::domain_error("encode_goal: point outside the map");
    }
    const int row = band_of(p.x(), pg.patch_w, n);
    const int col = band_of(p.y(), pg.patch_h, n);
    BiLevelAction a;
    a.patch = row * n + col;
    a.off_x = encode_axis(p.x(), row, pg.patch_w);
    a.off_y = encode_axis(p.y(), col, pg.patch_h);
    return a;
}

Vec2 canonicalize_goal(const Vec2& p, const PatchGrid& pg) {
    return decode_goal(encode_goal(p, pg), pg);
}

} // namespace exsim
