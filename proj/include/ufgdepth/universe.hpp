#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ufgdepth/errors.hpp"

namespace ufgdepth {

// Row-per-item bit matrices cap the item count at one machine word.
inline constexpr std::size_t kMaxItems = 64;

/// The fixed, ordered set of items (optimizer names) every relation ranges over.
/// Index k refers to the same label for the lifetime of the value.
class Universe {
 public:
  static std::shared_ptr<const Universe> make(std::vector<std::string> items) {
    if (items.empty()) throw EmptyInput("Universe::make");
    if (items.size() > kMaxItems) throw UniverseTooLarge(items.size(), kMaxItems);
    std::unordered_set<std::string_view> seen;
    for (const auto& item : items) {
      if (item.empty()) throw ValidationError("universe labels must be non-empty");
      if (!seen.insert(item).second) throw ValidationError("duplicate universe label: " + item);
    }
    return std::shared_ptr<const Universe>(new Universe(std::move(items)));
  }

  std::size_t size() const noexcept { return items_.size(); }
  const std::string& label(std::size_t k) const { return items_.at(k); }
  const std::vector<std::string>& labels() const noexcept { return items_; }

  std::optional<std::size_t> find(std::string_view label) const noexcept {
    for (std::size_t k = 0; k < items_.size(); ++k)
      if (items_[k] == label) return k;
    return std::nullopt;
  }

  friend bool operator==(const Universe& a, const Universe& b) { return a.items_ == b.items_; }

 private:
  explicit Universe(std::vector<std::string> items) : items_(std::move(items)) {}
  std::vector<std::string> items_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) throw UniverseMismatch();
}

}  // namespace ufgdepth
