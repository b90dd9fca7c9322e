#pragma once
/// @file catalog_profiles.hpp
/// @brief Frozen invariant profiles for the isomorphism classes in the catalog.
///
/// Each profile was computed once with invariant_profile() on the class
/// representative, cross-checked at every documented sample of every entry in
/// the class, and frozen here.  full_verify() recomputes the profile of the
/// algebra under test and demands exact equality, so any drift in the table
/// builders or in the invariant code itself surfaces as a verification
/// failure.
///
/// The g7 and g8 families are genuine one-parameter moduli: their Killing
/// form is supported on a single diagonal entry whose value is a quadratic
/// polynomial in the parameter (established exactly at five sample points,
/// which over-determines a quadratic).  The signature therefore flips at an
/// irrational threshold and is a function of the parameter, not of the class
/// alone:
///
///   g7:  K = ((3*delta^2 - 4)/2) e4 (x) e4   -> (0,1,4) below, (1,0,4) above
///   g8:  K = (1 - 2*delta^2)     e4 (x) e4   -> (1,0,4) below, (0,1,4) above
///
/// Both thresholds (delta = 2/sqrt(3), delta = 1/sqrt(2)) are irrational, so
/// the rank is exactly 1 at every rational parameter and the sign test below
/// is total on the domain delta > 0.  Note g5 and g7-above-threshold share a
/// profile; profiles separate g1..g6 pairwise but are not complete invariants.

#include <sasakian/catalog.hpp>
#include <sasakian/lie.hpp>

#include <map>
#include <optional>
#include <string>

namespace sasakian {

[[nodiscard]] inline std::optional<Profile> expected_profile(const std::string& iso_class,
                                                             const Params& params) {
    static const std::map<std::string, Profile> table = {
        {"affxR", Profile{3, 1, {3, 1, 0}, {3, 1, 1}, true, false, false, 1, Signature{1, 0, 2}}},
        {"g0", Profile{5, 0, {5, 3, 1, 0}, {5, 3, 3}, true, false, false, 2, Signature{1, 1, 3}}},
        {"g2", Profile{5, 1, {5, 2, 0}, {5, 2, 1, 1}, true, false, false, 1, Signature{1, 0, 4}}},
        {"g3", Profile{5, 1, {5, 3, 1, 0}, {5, 3, 3}, true, false, true, 1, Signature{0, 1, 4}}},
        {"g4", Profile{5, 1, {5, 2, 0}, {5, 2, 2}, true, false, false, 2, Signature{2, 0, 3}}},
        {"g5", Profile{5, 1, {5, 3, 1, 0}, {5, 3, 3}, true, false, false, 1, Signature{1, 0, 4}}},
        {"g6", Profile{5, 1, {5, 4, 2, 0}, {5, 4, 4}, true, false, false, 1, Signature{1, 0, 4}}},
        {"g7", Profile{5, 1, {5, 3, 1, 0}, {5, 3, 3}, true, false, false, 1, Signature{0, 1, 4}}},
        {"g8", Profile{5, 1, {5, 4, 1, 0}, {5, 4, 4}, true, false, false, 1, Signature{1, 0, 4}}},
        {"h3", Profile{3, 1, {3, 1, 0}, {3, 1, 0}, true, true, true, 0, Signature{0, 0, 3}}},
        {"h5", Profile{5, 1, {5, 1, 0}, {5, 1, 0}, true, true, true, 0, Signature{0, 0, 5}}},
        {"sl2", Profile{3, 0, {3, 3}, {3, 3}, false, false, true, 3, Signature{2, 1, 0}}},
        {"sl2_r2", Profile{5, 0, {5, 5}, {5, 5}, false, false, true, 3, Signature{2, 1, 2}}},
        {"sl2xaff", Profile{5, 0, {5, 4, 3, 3}, {5, 4, 4}, false, false, false, 4, Signature{3, 1, 1}}},
        {"su2", Profile{3, 0, {3, 3}, {3, 3}, false, false, true, 3, Signature{0, 3, 0}}},
        {"su2xaff", Profile{5, 0, {5, 4, 3, 3}, {5, 4, 4}, false, false, false, 4, Signature{1, 3, 1}}},
    };
    auto it = table.find(iso_class);
    if (it == table.end()) return std::nullopt;
    Profile p = it->second;
    // Parameter-dependent Killing signatures for the moduli families.  The
    // frozen base rows hold the below-threshold value; flip above it.
    auto de_it = params.find("delta");
    if (de_it != params.end()) {
        const Rat& de = de_it->second;
        if (iso_class == "g7" && Rat(3) * de * de > Rat(4)) p.killing_signature = Signature{1, 0, 4};
        if (iso_class == "g8" && Rat(2) * de * de > Rat(1)) p.killing_signature = Signature{0, 1, 4};
    }
    return p;
}

}  // namespace sasakian
