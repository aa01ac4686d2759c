#pragma once

#include <string_view>
#include <vector>

struct EmbeddedFixture {
    std::string_view name;
    std::string_view text;
};

// Sorted by name; generated from fixtures/*.json at configure time.
const std::vector<EmbeddedFixture>& embedded_fixtures();
