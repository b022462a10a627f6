#pragma once

#include <string>

#include "relrips/fixture.hpp"

namespace relrips::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(RELRIPS_FIXTURE_DIR) + "/" + name;
}

inline const Fixture& f2() {
    static Fixture fx = load_fixture(fixture_path("f2.grp"));
    return fx;
}
inline const Fixture& f2_rel_a() {
    static Fixture fx = load_fixture(fixture_path("f2_rel_a.grp"));
    return fx;
}
inline const Fixture& z2_rel_a() {
    static Fixture fx = load_fixture(fixture_path("z2_rel_a.grp"));
    return fx;
}
inline const Fixture& c6() {
    static Fixture fx = load_fixture(fixture_path("c6.grp"));
    return fx;
}

}  // namespace relrips::testing
