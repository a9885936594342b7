#pragma once

#include "exsim/grid.hpp"

namespace exsim {

/// The map discretization behind the bi-level action space: patches_per_side
/// x patches_per_side uniform patches of size patch_w x patch_h meters.
struct PatchGrid {
    int patches_per_side = 8;
    double patch_w = 125.0 / 8.0;
    double patch_h = 125.0 / 8.0;

    static PatchGrid for_map(double side_x, double side_y, int patches = 8) {
        return {patches, side_x / patches, side_y / patches};
    }
    int patch_count() const { return patches_per_side * patches_per_side; }
};

/// Exploration goal as (patch index, continuous within-patch offsets).
/// patch in [0, patches^2), offsets in [-1, 1].
struct BiLevelAction {
    int patch = 0;
    double off_x = 0.0;
    double off_y = 0.0;

    bool operator==(const BiLevelAction&) const = default;
};

/// World-frame goal of an action:
///   x = (2 floor(g/P) + 1 + off_x) * patch_w / 2
///   y = (2 (g mod P)  + 1 + off_y) * patch_h / 2
Vec2 decode_goal(const BiLevelAction& a, const PatchGrid& pg);

/// Inverse of decode_goal. The patch is the row-major patch containing p
/// (points on a patch boundary go to the lower-index patch); offsets are
/// chosen so that decode_goal reproduces p bit-exactly. For the rare points
/// that no offset can decode to exactly (floating-point rounding leaves gaps
/// in the decode image), the nearest decodable point is encoded instead;
/// such points are at most one ulp of the map side away. Throws
/// std::domain_error if p lies outside the map.
BiLevelAction encode_goal(const Vec2& p, const PatchGrid& pg);

/// decode(encode(p)): snaps an arbitrary point to the action codec's image.
/// Goals passed through this are exactly re-encodable.
Vec2 canonicalize_goal(const Vec2& p, const PatchGrid& pg);

} // namespace exsim
