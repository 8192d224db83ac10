#pragma once

#include <string>
#include <vector>

namespace g2c {

/// One named check with its verdict. `witness` describes the first failure.
struct CheckItem {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.passed) return false;
    return true;
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }

  /// First failing item, or nullptr.
  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (!it.passed) return &it;
    return nullptr;
  }

  void add(std::string name, bool passed, std::string witness = {}) {
    items.push_back({std::move(name), passed, std::move(witness)});
  }
};

}  // namespace g2c
