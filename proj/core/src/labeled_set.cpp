#include "nrs/labeled_set.hpp"

#include <unordered_set>

#include "nrs/errors.hpp"

namespace nrs {

LabeledNSet::LabeledNSet(std::vector<Entry> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& [name, value] : labels_) {
    if (!seen.insert(name).second) {
      throw ValidationError("duplicate label name: " + name);
    }
    value.validate(name.c_str());
  }
}

std::optional<std::size_t> LabeledNSet::find(const std::string& label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k].first == label) return k;
  }
  return std::nullopt;
}

bool LabeledNSet::same_schema(const LabeledNSet& other) const {
  if (labels_.size() != other.labels_.size()) return false;
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k].first != other.labels_[k].first) return false;
  }
  return true;
}

}  // namespace nrs
