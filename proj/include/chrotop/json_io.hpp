#pragma once

#include <chrotop/certificates.hpp>
#include <chrotop/complex.hpp>
#include <chrotop/models.hpp>
#include <chrotop/protocol.hpp>
#include <chrotop/solve.hpp>
#include <chrotop/tasks.hpp>

#include <json.hpp>

#include <memory>

namespace chrotop {

using Json = nlohmann::ordered_json;

/// Bumped whenever a serialized layout changes.
inline constexpr int schema_version = 1;

auto to_json(const Vertex & v) -> Json;
auto to_json(const Simplex & s) -> Json;
auto to_json(const Complex & k) -> Json;
auto to_json(const Task & t) -> Json;
auto to_json(const ModelSpec & m) -> Json;
auto to_json(const SimplicialMapData & map) -> Json;
auto to_json(const TableProtocol & p) -> Json;
auto to_json(const ExecutionWord & w) -> Json;
auto to_json(const Interval & i) -> Json;
auto to_json(const ConsensusCertificate & c) -> Json;
auto to_json(const SpernerReport & r) -> Json;
auto to_json(const GactReport & r) -> Json;
auto to_json(const SolveReport & r) -> Json;
auto to_json(const Verdict & v) -> Json;

/// Readers throw ParseError on malformed documents.
auto vertex_from_json(const Json & j) -> Vertex;
auto complex_from_json(const Json & j) -> Complex;
auto task_from_json(const Json & j) -> Task;
auto model_from_json(const Json & j) -> ModelSpec;
auto table_from_json(const Json & j) -> std::shared_ptr<const TableProtocol>;

auto read_json_file(const std::string & path) -> Json;

}
