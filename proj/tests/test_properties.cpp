#include <doctest.h>

#include "properties.hpp"

TEST_CASE("randomized invariants")
{
    for (const auto& prop : chtg::testing::all_properties()) {
        const auto r = prop.run(1000);
        CAPTURE(r.name);
        CAPTURE(r.worst);
        CHECK(r.failures == 0);
    }
}
