#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "kbest/core/types.hpp"

namespace kbest::bela {

enum class TraceKind {
  Expand,            // state closed; value = g*, f = f
  Duplicate,         // already-closed state popped; edge = via, value = g
  GoalPop,           // goal copy popped; edge = via, value = g
  CentroidCreated,   // edge + value = total cost
  CentroidConsumed,  // edge + value = total cost
  GbRegistered,      // state + value = gb
  PathEmitted,       // value = path cost
};

std::string_view to_string(TraceKind kind);

struct TraceEvent {
  TraceKind kind;
  StateKey state;
  std::optional<EdgeRef> edge;
  Cost value = 0;
  Cost f = 0;
};

using TraceHook = std::function<void(const TraceEvent&)>;

}  // namespace kbest::bela
