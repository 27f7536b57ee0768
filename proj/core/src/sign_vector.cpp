#include "lininv/sign_vector.hpp"

#include "lininv/errors.hpp"

namespace lininv {

SignVector::SignVector(std::size_t length, std::uint64_t bits, std::vector<std::size_t> coordinate_map)
    : length_(length), bits_(bits), coordinate_map_(std::move(coordinate_map)) {
  if (length == 0 || length > kMaxSignLength) {
    throw PreconditionError("sign vector length " + std::to_string(length) + " out of range");
  }
  if ((bits & ~full_mask(length)) != 0) throw PreconditionError("sign vector mask wider than its length");
  if (!coordinate_map_.empty() && coordinate_map_.size() != length) {
    throw PreconditionError("coordinate map length does not match sign vector");
  }
}

SignVector SignVector::from_signs(std::span<const int> signs) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] == -1) {
      bits |= std::uint64_t{1} << k;
    } else if (signs[k] != 1) {
      throw PreconditionError("sign vector entries must be +1 or -1");
    }
  }
  return SignVector(signs.size(), bits);
}

SignVector SignVector::negated() const {
  return SignVector(length_, bits_ ^ full_mask(length_), coordinate_map_);
}

std::vector<int> SignVector::signs() const {
  std::vector<int> out(length_);
  for (std::size_t k = 0; k < length_; ++k) out[k] = (*this)[k];
  return out;
}

std::string SignVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < length_; ++k) {
    if (k != 0) out += ',';
    out += (*this)[k] > 0 ? '+' : '-';
  }
  out += ')';
  return out;
}

}  // namespace lininv
