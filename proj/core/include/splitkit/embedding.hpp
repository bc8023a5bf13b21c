#pragma once

#include <functional>
#include <map>
#include <vector>

#include "splitkit/graph.hpp"

namespace splitkit {

enum class EmbedMode { induced, subgraph };

/// Pattern vertex id -> host vertex id.
using Embedding = std::map<Vertex, Vertex>;

/// Calls `visit` for every embedding in a fixed order (pattern vertices in
/// ascending id, host candidates in ascending id). Stops early if `visit` returns false.
void for_each_embedding(const Graph& pattern, const Graph& host, EmbedMode mode,
                        const std::function<bool(const Embedding&)>& visit);

std::vector<Embedding> enumerate_embeddings(const Graph& pattern, const Graph& host, EmbedMode mode);

/// True if at least one embedding exists.
bool embeds(const Graph& pattern, const Graph& host, EmbedMode mode);

}  // namespace splitkit
