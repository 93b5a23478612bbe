#include "degloci/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "degloci/errors.hpp"

namespace degloci {

bool is_valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Ring::Ring(std::vector<std::string> vars, std::optional<std::string> laurent)
    : vars_(std::move(vars)), laurent_(std::move(laurent)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!is_valid_identifier(v)) throw Error("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error("duplicate variable '" + v + "'");
  }
  if (laurent_) {
    if (!is_valid_identifier(*laurent_)) throw Error("invalid parameter name '" + *laurent_ + "'");
    if (seen.count(*laurent_)) {
      throw Error("Laurent parameter '" + *laurent_ + "' clashes with a ring variable");
    }
  }
}

const std::string& Ring::var(std::size_t i) const {
  if (i == laurent_slot() && laurent_) return *laurent_;
  return vars_.at(i);
}

const std::string& Ring::laurent_name() const {
  if (!laurent_) throw Error("ring has no Laurent parameter");
  return *laurent_;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  if (laurent_ && *laurent_ == name) return laurent_slot();
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw UndeclaredVariable(std::string(name));
  return *i;
}

RingPtr make_ring(std::vector<std::string> vars, std::optional<std::string> laurent) {
  return std::make_shared<const Ring>(std::move(vars), std::move(laurent));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

RingPtr ring_without(const RingPtr& ring, const std::vector<std::string>& drop) {
  std::vector<std::string> keep;
  for (const auto& v : ring->vars()) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
  }
  std::optional<std::string> laurent;
  if (ring->has_laurent()) laurent = ring->laurent_name();
  return make_ring(std::move(keep), laurent);
}

RingPtr ring_with(const RingPtr& ring, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = ring->vars();
  for (const auto& v : extra) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  std::optional<std::string> laurent;
  if (ring->has_laurent()) laurent = ring->laurent_name();
  return make_ring(std::move(vars), laurent);
}

RingPtr ring_with_laurent(const RingPtr& ring, const std::string& name) {
  if (ring->has_laurent()) {
    if (ring->laurent_name() != name) throw RingMismatch("ring already has a different Laurent parameter");
    return ring;
  }
  return make_ring(ring->vars(), name);
}

RingPtr ring_without_laurent(const RingPtr& ring) {
  if (!ring->has_laurent()) return ring;
  return make_ring(ring->vars());
}

}  // namespace degloci
