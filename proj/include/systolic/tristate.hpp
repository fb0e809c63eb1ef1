#pragma once

#include <string>

namespace systolic {

/// Three-valued verdict; Unknown is produced only by bounded procedures.
enum class TriState { Yes, No, Unknown };

inline TriState tri_of(bool b) { return b ? TriState::Yes : TriState::No; }

inline TriState tri_and(TriState a, TriState b) {
  if (a == TriState::No || b == TriState::No) return TriState::No;
  if (a == TriState::Yes && b == TriState::Yes) return TriState::Yes;
  return TriState::Unknown;
}

inline std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes:
      return "Yes";
    case TriState::No:
      return "No";
    default:
      return "Unknown";
  }
}

inline std::string to_letter(TriState t) {
  switch (t) {
    case TriState::Yes:
      return "Y";
    case TriState::No:
      return "N";
    default:
      return "Unknown";
  }
}

}  // namespace systolic
