#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

#include "chromadist/lll/common.hpp"

namespace chromadist::lll::detail {

inline void sort_events(std::vector<BadEvent>& events) {
  std::sort(events.begin(), events.end(), [](const BadEvent& a, const BadEvent& b) {
    return std::tie(a.scope, a.kind, a.class_index) < std::tie(b.scope, b.kind, b.class_index);
  });
}

// Rounds of: collect violated events, resample each one's scope in sorted
// order. `check()` returns the violated events of the current state;
// `resample(event)` re-draws the coins of its scope; `degenerate(events)`
// says whether re-drawing can no longer change any of them.
template <class Check, class Resample, class Degenerate>
ResampleStats resample_until_clean(Check&& check, Resample&& resample, Degenerate&& degenerate,
                                   std::uint64_t max_resamples) {
  ResampleStats stats;
  for (;;) {
    auto events = check();
    if (events.empty()) {
      stats.remaining_events = 0;
      return stats;
    }
    stats.remaining_events = events.size();
    if (degenerate(events)) {
      stats.degenerate = true;
      stats.flagged = true;
      return stats;
    }
    if (stats.resamples >= max_resamples) {
      stats.flagged = true;
      return stats;
    }
    sort_events(events);
    ++stats.rounds;
    for (const auto& ev : events) {
      if (stats.resamples >= max_resamples) break;
      resample(ev);
      ++stats.resamples;
      ++stats.per_kind[static_cast<std::size_t>(ev.kind)];
    }
  }
}

inline void add_counts(ResampleCounts& into, const ResampleCounts& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

}  // namespace chromadist::lll::detail
