#include "metalie/module_vector.hpp"

#include <algorithm>

#include "metalie/error.hpp"

namespace metalie {

ModuleVector ModuleVector::unit(const Ring& ring, std::size_t width, std::size_t index) {
  ModuleVector v(ring, width);
  v.set(index, Polynomial::constant(ring, 1));
  return v;
}

ModuleVector ModuleVector::from_dense(const Ring& ring, const std::vector<Polynomial>& components) {
  ModuleVector v(ring, components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!(components[i].ring() == ring)) throw ConfigurationError("component over a different ring");
    if (!components[i].is_zero()) v.entries_.emplace_back(i, components[i]);
  }
  return v;
}

Polynomial ModuleVector::component(std::size_t i) const {
  if (i >= width_) throw ConfigurationError("component index out of range");
  for (const auto& [j, f] : entries_)
    if (j == i) return f;
  return Polynomial(ring_);
}

void ModuleVector::set(std::size_t i, Polynomial value) {
  if (i >= width_) throw ConfigurationError("component index out of range");
  if (!(value.ring() == ring_)) throw ConfigurationError("component over a different ring");
  auto it = entries_.begin();
  while (it != entries_.end() && it->first < i) ++it;
  if (it != entries_.end() && it->first == i) {
    if (value.is_zero()) entries_.erase(it);
    else it->second = std::move(value);
  } else if (!value.is_zero()) {
    entries_.emplace(it, i, std::move(value));
  }
}

std::vector<Polynomial> ModuleVector::dense() const {
  std::vector<Polynomial> out(width_, Polynomial(ring_));
  for (const auto& [i, f] : entries_) out[i] = f;
  return out;
}

int ModuleVector::degree() const noexcept {
  int d = -1;
  for (const auto& e : entries_) d = std::max(d, e.second.total_degree());
  return d;
}

void ModuleVector::check(const ModuleVector& o) const {
  if (!(ring_ == o.ring_) || width_ != o.width_) throw ConfigurationError("module vectors of different shape");
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector v(ring_, width_);
  v.entries_.reserve(entries_.size());
  for (const auto& [i, f] : entries_) v.entries_.emplace_back(i, -f);
  return v;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  check(o);
  ModuleVector v(ring_, width_);
  std::size_t a = 0, b = 0;
  while (a < entries_.size() && b < o.entries_.size()) {
    if (entries_[a].first < o.entries_[b].first) {
      v.entries_.push_back(entries_[a++]);
    } else if (entries_[a].first > o.entries_[b].first) {
      v.entries_.push_back(o.entries_[b++]);
    } else {
      Polynomial s = entries_[a].second + o.entries_[b].second;
      if (!s.is_zero()) v.entries_.emplace_back(entries_[a].first, std::move(s));
      ++a;
      ++b;
    }
  }
  for (; a < entries_.size(); ++a) v.entries_.push_back(entries_[a]);
  for (; b < o.entries_.size(); ++b) v.entries_.push_back(o.entries_[b]);
  return v;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const { return *this + (-o); }

ModuleVector ModuleVector::operator*(const Polynomial& f) const {
  ModuleVector v(ring_, width_);
  if (f.is_zero()) return v;
  for (const auto& [i, g] : entries_) {
    Polynomial h = g * f;
    if (!h.is_zero()) v.entries_.emplace_back(i, std::move(h));
  }
  return v;
}

ModuleVector ModuleVector::scaled(Coeff c) const {
  ModuleVector v(ring_, width_);
  if (c % ring_.p() == 0) return v;
  for (const auto& [i, g] : entries_) v.entries_.emplace_back(i, g.scaled(c));
  return v;
}

ModuleVector ModuleVector::sub_mul_term(const ModuleVector& o, const Monomial& m, Coeff c) const {
  check(o);
  ModuleVector v(ring_, width_);
  std::size_t a = 0, b = 0;
  Polynomial zero(ring_);
  while (a < entries_.size() || b < o.entries_.size()) {
    std::size_t ia = a < entries_.size() ? entries_[a].first : width_;
    std::size_t ib = b < o.entries_.size() ? o.entries_[b].first : width_;
    if (ia < ib) {
      v.entries_.push_back(entries_[a++]);
    } else if (ib < ia) {
      Polynomial h = zero.sub_mul_term(o.entries_[b++].second, m, c);
      if (!h.is_zero()) v.entries_.emplace_back(ib, std::move(h));
    } else {
      Polynomial h = entries_[a++].second.sub_mul_term(o.entries_[b++].second, m, c);
      if (!h.is_zero()) v.entries_.emplace_back(ia, std::move(h));
    }
  }
  return v;
}

ModuleVector ModuleVector::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.field().inv(lead_term().coeff));
}

void ModuleVector::drop_lead_term() {
  auto& [i, f] = entries_.front();
  std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
  if (rest.empty()) {
    entries_.erase(entries_.begin());
  } else {
    f = Polynomial::from_terms(ring_, std::move(rest));
  }
}

ModuleVector ModuleVector::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > width_) throw ConfigurationError("slice out of range");
  ModuleVector v(ring_, end - begin);
  for (const auto& [i, f] : entries_)
    if (i >= begin && i < end) v.entries_.emplace_back(i - begin, f);
  return v;
}

ModuleVector ModuleVector::shifted(std::size_t offset, std::size_t new_width) const {
  if (offset + width_ > new_width) throw ConfigurationError("shift out of range");
  ModuleVector v(ring_, new_width);
  for (const auto& [i, f] : entries_) v.entries_.emplace_back(i + offset, f);
  return v;
}

std::string ModuleVector::to_string() const {
  std::string s = "(";
  std::size_t next = 0;
  for (std::size_t i = 0; i < width_; ++i) {
    if (i) s += "; ";
    if (next < entries_.size() && entries_[next].first == i) s += entries_[next++].second.to_string();
    else s += '0';
  }
  return s + ')';
}

int compare_leads(const ModuleVector& a, const ModuleVector& b) {
  if (a.lead_index() != b.lead_index()) return a.lead_index() < b.lead_index() ? 1 : -1;
  return compare(a.lead_term().mono, b.lead_term().mono);
}

ModuleVector concat(const ModuleVector& lhs, const ModuleVector& rhs) {
  std::size_t w = lhs.width() + rhs.width();
  return lhs.shifted(0, w) + rhs.shifted(lhs.width(), w);
}

}  // namespace metalie
