#pragma once

#include "mayerkit/errors.hpp"

#include <string>
#include <type_traits>

namespace mayerkit::graphs {

template <class Fn>
std::uint64_t for_each_graph(int n, GraphClass cls, Fn&& fn) {
  if (n < 1) throw DomainError("graph enumeration needs n >= 1");
  if (n > kMaxEnumVertices) {
    throw CapacityError("graph enumeration capped at n = " + std::to_string(kMaxEnumVertices) +
                        ", requested " + std::to_string(n));
  }
  const EdgeMask total = EdgeMask{1} << edge_count(n);
  std::uint64_t count = 0;
  for (EdgeMask m = 0; m < total; ++m) {
    bool keep = true;
    switch (cls) {
      case GraphClass::all: break;
      case GraphClass::connected: keep = detail::connected_mask(n, m); break;
      case GraphClass::two_connected: keep = detail::two_connected_mask(n, m); break;
    }
    if (!keep) continue;
    ++count;
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const LabeledGraph&>, bool>) {
      if (!fn(LabeledGraph(n, m))) break;
    } else {
      fn(LabeledGraph(n, m));
    }
  }
  return count;
}

}  // namespace mayerkit::graphs
