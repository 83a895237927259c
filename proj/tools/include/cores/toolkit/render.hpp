#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cores/cores.hpp"

namespace cores::render {

enum class Mode { cores, tcores };

/// Planar picture of the dominant alcoves of P^3. depth counts alcove rows:
/// depth 1 is the fundamental alcove alone.
struct RenderSpec {
    std::int64_t s = 3;
    std::int64_t t = 1;
    std::int64_t depth = 5;
    Mode mode = Mode::cores;

    /// Throws DomainError unless s == 3, depth >= 1, and gcd(3,t) = 1 in tcores mode.
    void validate() const;
};

struct RenderedAlcove {
    SPoint point;            // dominant s-point of the alcove
    std::int64_t distance;   // hyperplanes separating it from the fundamental alcove
    Partition label;         // the 3-core, or its t-core in tcores mode
};

/// Alcoves with distance < depth, ordered by distance then point.
std::vector<RenderedAlcove> layout(const RenderSpec& spec);

/// Deterministic SVG 1.1 document for layout(spec).
std::string svg(const RenderSpec& spec);

}  // namespace cores::render
