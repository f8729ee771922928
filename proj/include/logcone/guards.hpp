#pragma once

#include <cstdlib>
#include <string>

namespace logcone {

// Size guards for the exponential-cost routines. LOGCONE_MAX_RANK overrides the
// face enumeration bound (default 6); the pan refinement bound tracks it two
// below (default 4).
inline int face_rank_guard() {
  static int cached = [] {
    const char* env = std::getenv("LOGCONE_MAX_RANK");
    if (env != nullptr) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 6;
  }();
  return cached;
}

inline int pan_rank_guard() {
  int g = face_rank_guard() - 2;
  return g < 1 ? 1 : g;
}

inline constexpr int kMaxSubpans = 4;

}  // namespace logcone
