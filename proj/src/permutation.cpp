#include "permsolv/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace permsolv {

namespace {

constexpr std::size_t kMaxDegree =
    std::size_t{std::numeric_limits<Permutation::point_type>::max()} + 1;

void require_same_degree(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("permutation degree mismatch: " +
                                std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
}

} // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree)
    throw std::invalid_argument("permutation degree too large");
  std::iota(images_.begin(), images_.end(), point_type{0});
}

Permutation::Permutation(std::vector<point_type> images)
    : images_(std::move(images)) {
  if (images_.size() > kMaxDegree)
    throw std::invalid_argument("permutation degree too large");
  std::vector<bool> seen(images_.size(), false);
  for (auto image : images_) {
    if (image >= images_.size() || seen[image])
      throw std::invalid_argument("image table is not a bijection");
    seen[image] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::size_t Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return i;
  return images_.size();
}

void Permutation::multiply_into(const Permutation &lhs, const Permutation &rhs,
                                Permutation &out) {
  require_same_degree(lhs, rhs);
  const std::size_t n = lhs.images_.size();
  out.images_.resize(n);
  const point_type *a = lhs.images_.data();
  const point_type *b = rhs.images_.data();
  point_type *c = out.images_.data();
  for (std::size_t i = 0; i < n; ++i)
    c[i] = b[a[i]];
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  Permutation out;
  multiply_into(*this, rhs, out);
  return out;
}

Permutation &Permutation::operator*=(const Permutation &rhs) {
  require_same_degree(*this, rhs);
  for (auto &image : images_)
    image = rhs.images_[image];
  return *this;
}

std::strong_ordering operator<=>(const Permutation &lhs,
                                 const Permutation &rhs) {
  if (auto c = lhs.degree() <=> rhs.degree(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(
      lhs.images_.begin(), lhs.images_.end(), rhs.images_.begin(),
      rhs.images_.end());
}

ParseError::ParseError(const std::string &what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0)
    throw std::invalid_argument("degree must be positive");
  std::vector<Permutation::point_type> images(degree);
  std::iota(images.begin(), images.end(), Permutation::point_type{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '('", pos);
    ++pos;
    skip_space();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_space();
      continue;
    }

    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      const std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree)
          value = degree + 1; // clamp; reported below
        ++pos;
      }
      if (pos == start)
        throw ParseError("expected a point", start);
      if (value < 1 || value > degree)
        throw ParseError("point out of range 1.." + std::to_string(degree),
                         start);
      if (used[value - 1])
        throw ParseError("repeated point " + std::to_string(value), start);
      used[value - 1] = true;
      cycle.push_back(value - 1);

      skip_space();
      if (pos >= text.size())
        throw ParseError("unterminated cycle", pos);
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')'", pos);
    }

    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<Permutation::point_type>(
          cycle[(i + 1) % cycle.size()]);
    skip_space();
  }
  return Permutation(std::move(images));
}

std::string to_cycle_string(const Permutation &p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start)
      continue;
    out += '(';
    std::size_t point = start;
    bool first = true;
    while (!seen[point]) {
      seen[point] = true;
      if (!first)
        out += ',';
      out += std::to_string(point + 1);
      first = false;
      point = p[point];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  return p * q;
}

Permutation inverse(const Permutation &p) {
  std::vector<Permutation::point_type> images(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i)
    images[p[i]] = static_cast<Permutation::point_type>(i);
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation &p, const Permutation &g) {
  require_same_degree(p, g);
  // x^(g^-1 p g): relabel each point of p through g.
  std::vector<Permutation::point_type> images(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i)
    images[g[i]] = g[p[i]];
  return Permutation(std::move(images));
}

Permutation commutator(const Permutation &p, const Permutation &q) {
  return inverse(p) * conjugate(p, q);
}

std::uint64_t element_order(const Permutation &p) {
  std::uint64_t order = 1;
  for (auto length : cycle_type(p))
    order = std::lcm(order, static_cast<std::uint64_t>(length));
  return order;
}

std::vector<std::size_t> cycle_type(const Permutation &p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start])
      continue;
    std::size_t length = 0;
    for (std::size_t point = start; !seen[point]; point = p[point]) {
      seen[point] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool commute(const Permutation &p, const Permutation &q) {
  require_same_degree(p, q);
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (q[p[i]] != p[q[i]])
      return false;
  return true;
}

} // namespace permsolv

std::size_t
std::hash<permsolv::Permutation>::operator()(
    const permsolv::Permutation &p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto image : p.images()) {
    h ^= image;
    h *= 1099511628211ull;
  }
  return h;
}
