#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nrs/triple.hpp"

namespace nrs {

/// An ordered collection of named linguistic labels, each carrying a Triple.
///
/// Label names are unique within one set. Sets are normally non-empty; an
/// empty set only arises as the crisp complement of a full universe.
class LabeledNSet {
 public:
  using Entry = std::pair<std::string, Triple>;

  LabeledNSet() = default;
  explicit LabeledNSet(std::vector<Entry> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<Entry>& entries() const { return labels_; }
  const std::string& name(std::size_t k) const { return labels_[k].first; }
  const Triple& value(std::size_t k) const { return labels_[k].second; }

  std::optional<std::size_t> find(const std::string& label) const;
  bool contains(const std::string& label) const { return find(label).has_value(); }

  /// True when both sets carry the same label names in the same order.
  bool same_schema(const LabeledNSet& other) const;

  friend bool operator==(const LabeledNSet&, const LabeledNSet&) = default;

 private:
  std::vector<Entry> labels_;
};

}  // namespace nrs
