#pragma once

#include <string>

#include "relrips/presentation.hpp"

namespace relrips {

/// A validated group-with-peripheral pair: presentation parsed, bounded
/// confluence check passed, peripheral normal-form closure verified.
struct Fixture {
    GroupPresentation group;
    PeripheralSpec peripheral;
    ConfluenceReport confluence;
    PeripheralClosureReport closure;
};

Fixture load_fixture(const std::string& path);

}  // namespace relrips
