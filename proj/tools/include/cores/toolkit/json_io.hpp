#pragma once

#include <json.hpp>

#include "cores/cores.hpp"

namespace cores::json_io {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const SSet& q);
json to_json(const SPoint& p);
json to_json(const OrbitDescentTrace& trace);
json to_json(const ContainmentChain& chain);

/// {"input": ..., "result": ..., "meta": {"s": ..., "t": ...}}; t omitted when not applicable.
json envelope(json input, json result, std::int64_t s, std::int64_t t = 0);

}  // namespace cores::json_io
