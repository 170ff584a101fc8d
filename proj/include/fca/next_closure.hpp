#pragma once

#include <optional>

#include "fca/index_set.hpp"

namespace fca {

/// One step of canonical closure generation: the lectically next set after
/// `current` that is closed under `close`, or nullopt when `current` is the
/// last one. `current` must itself be closed under `close`.
template <typename Tag, typename Closure>
std::optional<IndexSet<Tag>> next_closure(const IndexSet<Tag>& current, Closure&& close) {
  for (std::size_t i = current.universe(); i-- > 0;) {
    if (current.contains(i)) continue;
    const IndexSet<Tag> kept = current.prefix(i);
    IndexSet<Tag> candidate = kept;
    candidate.insert(i);
    candidate = close(candidate);
    // Canonicity: closing must not add anything below i.
    if (candidate.prefix(i) == kept) return candidate;
  }
  return std::nullopt;
}

}  // namespace fca
