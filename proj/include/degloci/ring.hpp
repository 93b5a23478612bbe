#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace degloci {

/// Polynomial ring Q[x_1..x_n], optionally extended to Q[x_1..x_n][t, 1/t].
///
/// Variables are identified by name. When a Laurent parameter is present it
/// occupies exponent slot n (after all ordinary variables); only that slot
/// may carry negative exponents.
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars, std::optional<std::string> laurent = std::nullopt);

  std::size_t nvars() const { return vars_.size(); }
  /// Number of exponent slots: nvars() plus one for the Laurent parameter.
  std::size_t width() const { return vars_.size() + (laurent_ ? 1 : 0); }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(std::size_t i) const;

  bool has_laurent() const { return laurent_.has_value(); }
  const std::string& laurent_name() const;
  std::size_t laurent_slot() const { return vars_.size(); }

  /// Slot of a name; the Laurent parameter resolves to laurent_slot().
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// As index_of, throws UndeclaredVariable when absent.
  std::size_t require(std::string_view name) const;

  bool operator==(const Ring& other) const = default;

 private:
  std::vector<std::string> vars_;
  std::optional<std::string> laurent_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, std::optional<std::string> laurent = std::nullopt);

/// Value equality (pointer identity is not required).
bool same_ring(const RingPtr& a, const RingPtr& b);

/// The ring with `drop` removed (Laurent parameter kept).
RingPtr ring_without(const RingPtr& ring, const std::vector<std::string>& drop);
/// The ring with `extra` appended (names already present are skipped).
RingPtr ring_with(const RingPtr& ring, const std::vector<std::string>& extra);
/// The ring with Laurent parameter `name` added.
RingPtr ring_with_laurent(const RingPtr& ring, const std::string& name = "t");
/// The ring with the Laurent parameter removed.
RingPtr ring_without_laurent(const RingPtr& ring);

bool is_valid_identifier(std::string_view name);

}  // namespace degloci
