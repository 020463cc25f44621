#include "posdyn/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "posdyn/error.hpp"

namespace posdyn {

IncreasingTableau::IncreasingTableau(Poset poset, std::size_t height, std::vector<Label> labels)
    : poset_(std::move(poset)), height_(height), labels_(std::move(labels)) {
  if (labels_.size() != poset_.size()) {
    std::ostringstream msg;
    msg << "tableau has " << labels_.size() << " labels for a poset of " << poset_.size()
        << " elements";
    throw InvalidArgument(msg.str());
  }
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    if (labels_[x] < 1 || labels_[x] > height_) {
      std::ostringstream msg;
      msg << "label " << labels_[x] << " at element " << x << " is outside 1.." << height_;
      throw InvalidArgument(msg.str());
    }
  }
  for (const auto& c : poset_.covers()) {
    if (labels_[c.lower] >= labels_[c.upper]) {
      std::ostringstream msg;
      msg << "labels are not strictly increasing along cover " << c.lower << " < " << c.upper
          << " (" << labels_[c.lower] << " >= " << labels_[c.upper] << ")";
      throw InvalidArgument(msg.str());
    }
  }
}

IncreasingTableau make_unchecked(Poset poset, std::size_t height, std::vector<Label> labels) {
  return IncreasingTableau(IncreasingTableau::Unchecked{}, std::move(poset), height,
                           std::move(labels));
}

bool is_increasing(const Poset& p, std::size_t q, std::span<const Label> labels) {
  if (labels.size() != p.size()) return false;
  for (auto l : labels)
    if (l < 1 || l > q) return false;
  for (const auto& c : p.covers())
    if (labels[c.lower] >= labels[c.upper]) return false;
  return true;
}

std::size_t IncreasingTableau::distinct_labels() const {
  std::vector<bool> seen(height_ + 1, false);
  std::size_t d = 0;
  for (auto l : labels_) {
    if (!seen[l]) {
      seen[l] = true;
      ++d;
    }
  }
  return d;
}

IncreasingTableau IncreasingTableau::with_height(std::size_t q) const {
  return IncreasingTableau(poset_, q, labels_);
}

std::string IncreasingTableau::to_string() const {
  std::ostringstream out;
  out << "q=" << height_ << " [";
  for (std::size_t i = 0; i < labels_.size(); ++i) out << (i ? "," : "") << labels_[i];
  out << ']';
  return out.str();
}

ContentVector ContentVector::parse(std::string_view word) {
  std::vector<bool> bits;
  for (char c : word) {
    if (c != '0' && c != '1') throw InvalidArgument("content vector must be a 0/1 word");
    bits.push_back(c == '1');
  }
  return ContentVector(std::move(bits));
}

std::size_t ContentVector::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

ContentVector ContentVector::rotated() const {
  auto bits = bits_;
  if (!bits.empty()) std::rotate(bits.begin(), bits.begin() + 1, bits.end());
  return ContentVector(std::move(bits));
}

std::string ContentVector::to_string() const {
  std::string s;
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

ContentVector content_vector(const IncreasingTableau& t) {
  std::vector<bool> bits(t.height(), false);
  for (auto l : t.labels()) bits[l - 1] = true;
  return ContentVector(std::move(bits));
}

std::size_t rotation_period(const ContentVector& v) {
  const auto q = v.length();
  auto r = v;
  for (std::size_t l = 1; l <= q; ++l) {
    r = r.rotated();
    if (r == v) return l;
  }
  return q == 0 ? 1 : q;
}

Deflation deflation(const IncreasingTableau& t) {
  std::vector<Label> rank_of(t.height() + 1, 0);
  for (auto l : t.labels()) rank_of[l] = 1;
  Label next = 0;
  for (std::size_t l = 1; l <= t.height(); ++l)
    if (rank_of[l]) rank_of[l] = ++next;
  std::vector<Label> labels(t.labels().begin(), t.labels().end());
  for (auto& l : labels) l = rank_of[l];
  return {make_unchecked(t.poset(), next, std::move(labels)), next};
}

IncreasingTableau inflate(const IncreasingTableau& packed, const ContentVector& v) {
  if (!packed.is_packed()) throw InvalidArgument("inflate: tableau is not packed");
  if (v.ones() != packed.height()) {
    std::ostringstream msg;
    msg << "inflate: content vector has " << v.ones() << " set bits but tableau uses "
        << packed.height() << " labels";
    throw InvalidArgument(msg.str());
  }
  std::vector<Label> position;
  for (std::size_t i = 1; i <= v.length(); ++i)
    if (v.has_label(i)) position.push_back(static_cast<Label>(i));
  std::vector<Label> labels(packed.labels().begin(), packed.labels().end());
  for (auto& l : labels) l = position[l - 1];
  return make_unchecked(packed.poset(), v.length(), std::move(labels));
}

std::size_t predicted_orbit_size(std::size_t q, const ContentVector& v, std::size_t packed_orbit) {
  if (v.length() != q) throw InvalidArgument("content vector length differs from q");
  const auto ell = rotation_period(v);
  const auto d = v.ones();
  if ((ell * d) % q != 0) {
    throw InvalidArgument("l*d/q is not an integer for this content vector");
  }
  const auto shift = ell * d / q;
  return ell * packed_orbit / std::gcd(shift, packed_orbit);
}

}  // namespace posdyn
