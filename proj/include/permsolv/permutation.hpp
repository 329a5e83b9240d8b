#ifndef PERMSOLV_PERMUTATION_HPP
#define PERMSOLV_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permsolv {

/// Permutation of the points {0, ..., degree-1}, stored as an image table.
///
/// Points are 0-based internally. Cycle notation (parse_cycles and
/// to_cycle_string) is 1-based. Products act on the right: (p * q) applies p
/// first, then q, so that x^(p*q) = (x^p)^q.
class Permutation {
public:
  using point_type = std::uint16_t;

  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// From a 0-based image table; throws std::invalid_argument unless it is a
  /// bijection.
  explicit Permutation(std::vector<point_type> images);

  std::size_t degree() const { return images_.size(); }

  point_type operator[](std::size_t point) const { return images_[point]; }

  std::span<const point_type> images() const { return images_; }

  bool is_identity() const;

  /// Smallest point moved, or degree() for the identity.
  std::size_t first_moved_point() const;

  Permutation operator*(const Permutation &rhs) const;
  Permutation &operator*=(const Permutation &rhs);

  /// Writes lhs * rhs into out without reallocating when out already has the
  /// right degree. out must not alias lhs or rhs.
  static void multiply_into(const Permutation &lhs, const Permutation &rhs,
                            Permutation &out);

  friend bool operator==(const Permutation &, const Permutation &) = default;

  /// Lexicographic on the image table (shorter degree first).
  friend std::strong_ordering operator<=>(const Permutation &lhs,
                                          const Permutation &rhs);

private:
  std::vector<point_type> images_;
};

/// Malformed cycle notation; position() is the 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses disjoint cycles such as "(1,2,3)(4,5)" over the points 1..degree.
/// Empty text and "()" denote the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical cycle notation: each cycle starts at its smallest point, cycles
/// ordered by smallest point, fixed points omitted, identity printed as "()".
std::string to_cycle_string(const Permutation &p);

Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);

/// g^-1 * p * g.
Permutation conjugate(const Permutation &p, const Permutation &g);

/// p^-1 q^-1 p q.
Permutation commutator(const Permutation &p, const Permutation &q);

std::uint64_t element_order(const Permutation &p);

/// Cycle lengths in non-increasing order, fixed points included as 1s.
std::vector<std::size_t> cycle_type(const Permutation &p);

bool commute(const Permutation &p, const Permutation &q);

} // namespace permsolv

template <> struct std::hash<permsolv::Permutation> {
  std::size_t operator()(const permsolv::Permutation &p) const noexcept;
};

#endif
