#include "cores/toolkit/json_io.hpp"

#include <vector>

namespace cores::json_io {

namespace {

json ints(std::span<const std::int64_t> xs) { return json(std::vector<std::int64_t>(xs.begin(), xs.end())); }

}  // namespace

json to_json(const Partition& p) { return ints(p.parts()); }
json to_json(const SSet& q) { return ints(q.elements()); }
json to_json(const SPoint& p) { return ints(p.coords()); }

json to_json(const OrbitDescentTrace& trace) {
    json steps = json::array();
    std::size_t n = 1;
    for (const auto& step : trace.steps)
        steps.push_back({{"step", n++},
                         {"gen", step.generator},
                         {"sset", to_json(step.s_set)},
                         {"core", to_json(core_from_s_set(step.s_set))}});
    return {{"initial", to_json(trace.initial)}, {"steps", steps}, {"final", to_json(trace.final)}};
}

json to_json(const ContainmentChain& chain) {
    json steps = json::array();
    for (std::size_t l = 0; l < chain.points.size(); ++l) {
        json rec{{"step", l},
                 {"point", to_json(chain.points[l])},
                 {"sset", to_json(chain.points[l].to_s_set())},
                 {"core", to_json(chain.cores[l])}};
        if (l > 0) {
            const auto& h = chain.crossed[l - 1];
            rec["gen"] = chain.generators[l - 1];
            rec["crossed"] = {{"i", h.i}, {"j", h.j}, {"k", h.k}};
        }
        steps.push_back(std::move(rec));
    }
    return {{"steps", steps}, {"monotone", chain.monotone()}};
}

json envelope(json input, json result, std::int64_t s, std::int64_t t) {
    json meta{{"s", s}};
    if (t > 0) meta["t"] = t;
    return {{"input", std::move(input)}, {"result", std::move(result)}, {"meta", std::move(meta)}};
}

}  // namespace cores::json_io
