#include "tensorbraid/group_ring.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace tensorbraid {

struct BraidTable::Impl {
  struct Entry {
    NormalForm nf;
    PositiveWord word;
    std::size_t length = 0;
    Generator max_index = 0;
  };

  mutable std::shared_mutex mutex;
  std::vector<Entry> entries;
  std::unordered_map<std::string, std::uint32_t> index;
  std::unordered_map<std::uint64_t, std::uint32_t> products;
  std::unordered_map<std::uint64_t, std::uint32_t> shifts;
  std::unordered_map<std::uint64_t, std::uint32_t> flips;

  static std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::optional<std::uint32_t> lookup(const std::unordered_map<std::uint64_t, std::uint32_t>& memo,
                                      std::uint64_t key) const {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    return std::nullopt;
  }

  void remember(std::unordered_map<std::uint64_t, std::uint32_t>& memo, std::uint64_t key,
                std::uint32_t value) {
    std::unique_lock lock(mutex);
    memo.emplace(key, value);
  }

  const Entry& entry(BraidId id) const {
    if (id.value >= entries.size()) throw std::out_of_range("unknown braid handle");
    return entries[id.value];
  }
};

BraidTable::BraidTable() : impl_(std::make_unique<Impl>()) { intern(NormalForm{}); }
BraidTable::~BraidTable() = default;

BraidTable& BraidTable::instance() {
  static BraidTable table;
  return table;
}

BraidId BraidTable::intern(const NormalForm& nf) {
  std::string key = nf.key();
  {
    std::shared_lock lock(impl_->mutex);
    if (auto it = impl_->index.find(key); it != impl_->index.end()) return BraidId{it->second};
  }
  Impl::Entry entry{nf, nf.word(), nf.length(), 0};
  entry.max_index = entry.word.max_index();
  std::unique_lock lock(impl_->mutex);
  auto [it, inserted] = impl_->index.emplace(std::move(key), static_cast<std::uint32_t>(impl_->entries.size()));
  if (inserted) impl_->entries.push_back(std::move(entry));
  return BraidId{it->second};
}

NormalForm BraidTable::normal_form_of(BraidId id) const {
  std::shared_lock lock(impl_->mutex);
  return impl_->entry(id).nf;
}

PositiveWord BraidTable::word_of(BraidId id) const {
  std::shared_lock lock(impl_->mutex);
  return impl_->entry(id).word;
}

std::size_t BraidTable::length_of(BraidId id) const {
  std::shared_lock lock(impl_->mutex);
  return impl_->entry(id).length;
}

Generator BraidTable::max_index_of(BraidId id) const {
  std::shared_lock lock(impl_->mutex);
  return impl_->entry(id).max_index;
}

std::size_t BraidTable::size() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->entries.size();
}

BraidId BraidTable::product(BraidId a, BraidId b) {
  if (a == identity()) return b;
  if (b == identity()) return a;
  const auto key = Impl::pair_key(a.value, b.value);
  if (auto hit = impl_->lookup(impl_->products, key)) return BraidId{*hit};
  NormalForm nf = normal_form_of(a);
  nf.multiply_right(normal_form_of(b));
  const BraidId result = intern(nf);
  impl_->remember(impl_->products, key, result.value);
  return result;
}

BraidId BraidTable::shift(BraidId id, unsigned ell) {
  if (ell == 0 || id == identity()) return id;
  const auto key = Impl::pair_key(id.value, ell);
  if (auto hit = impl_->lookup(impl_->shifts, key)) return BraidId{*hit};
  const BraidId result = intern(shift_word(word_of(id), ell));
  impl_->remember(impl_->shifts, key, result.value);
  return result;
}

BraidId BraidTable::flip(BraidId id, unsigned a) {
  const auto key = Impl::pair_key(id.value, a);
  if (auto hit = impl_->lookup(impl_->flips, key)) return BraidId{*hit};
  const BraidId result = intern(flip_word(word_of(id), a));
  impl_->remember(impl_->flips, key, result.value);
  return result;
}

// --- RingElement -----------------------------------------------------------

namespace {

bool by_id(const RingElement::Term& a, const RingElement::Term& b) { return a.first < b.first; }

}  // namespace

RingElement::RingElement(const LaurentPoly& scalar) {
  if (!scalar.is_zero()) terms_.emplace_back(BraidTable::identity(), scalar);
}

RingElement RingElement::basis(BraidId id, const LaurentPoly& coefficient) {
  RingElement e;
  if (!coefficient.is_zero()) e.terms_.emplace_back(id, coefficient);
  return e;
}

RingElement RingElement::word(const PositiveWord& w, const LaurentPoly& coefficient) {
  return basis(BraidTable::instance().intern(w), coefficient);
}

RingElement RingElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), by_id);
  RingElement e;
  for (auto& [id, c] : terms) {
    if (!e.terms_.empty() && e.terms_.back().first == id) {
      e.terms_.back().second += c;
      if (e.terms_.back().second.is_zero()) e.terms_.pop_back();
    } else if (!c.is_zero()) {
      e.terms_.emplace_back(id, std::move(c));
    }
  }
  return e;
}

LaurentPoly RingElement::coefficient(const PositiveWord& w) const {
  const BraidId id = BraidTable::instance().intern(w);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{id, {}}, by_id);
  return it != terms_.end() && it->first == id ? it->second : LaurentPoly{};
}

std::size_t RingElement::strand_count() const {
  std::size_t n = 1;
  auto& table = BraidTable::instance();
  for (const auto& t : terms_) n = std::max<std::size_t>(n, table.max_index_of(t.first) + 1U);
  return n;
}

bool RingElement::only_q_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.only_q(); });
}

namespace {

std::vector<RingElement::Term> merge_terms(const std::vector<RingElement::Term>& a,
                                           const std::vector<RingElement::Term>& b, bool subtract) {
  std::vector<RingElement::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, subtract ? -ib->second : ib->second);
      ++ib;
    } else {
      LaurentPoly c = subtract ? ia->second - ib->second : ia->second + ib->second;
      if (!c.is_zero()) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

RingElement& RingElement::operator+=(const RingElement& other) {
  if (!other.terms_.empty()) terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  if (!other.terms_.empty()) terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

RingElement operator-(const RingElement& a) {
  RingElement e = a;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  auto& table = BraidTable::instance();
  std::unordered_map<std::uint32_t, LaurentPoly> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ida, ca] : a.terms_) {
    for (const auto& [idb, cb] : b.terms_) {
      acc[table.product(ida, idb).value] += ca * cb;
    }
  }
  std::vector<RingElement::Term> terms;
  terms.reserve(acc.size());
  for (auto& [id, c] : acc) {
    if (!c.is_zero()) terms.emplace_back(BraidId{id}, std::move(c));
  }
  std::sort(terms.begin(), terms.end(), by_id);
  RingElement e;
  e.terms_ = std::move(terms);
  return e;
}

RingElement RingElement::scaled(const LaurentPoly& c) const {
  if (c.is_zero()) return {};
  RingElement e;
  e.terms_.reserve(terms_.size());
  for (const auto& [id, coeff] : terms_) {
    LaurentPoly p = coeff * c;
    if (!p.is_zero()) e.terms_.emplace_back(id, std::move(p));
  }
  return e;
}

RingElement RingElement::shifted(unsigned ell) const {
  if (ell == 0) return *this;
  auto& table = BraidTable::instance();
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [id, c] : terms_) terms.emplace_back(table.shift(id, ell), c);
  return from_terms(std::move(terms));
}

RingElement RingElement::flipped(unsigned a) const {
  auto& table = BraidTable::instance();
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [id, c] : terms_) terms.emplace_back(table.flip(id, a), c);
  return from_terms(std::move(terms));
}

std::vector<std::pair<PositiveWord, LaurentPoly>> RingElement::sorted_terms() const {
  auto& table = BraidTable::instance();
  std::vector<std::pair<PositiveWord, LaurentPoly>> out;
  out.reserve(terms_.size());
  for (const auto& [id, c] : terms_) out.emplace_back(table.word_of(id), c);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : sorted_terms()) {
    if (!out.empty()) out += " + ";
    const std::string coeff = c.size() == 1 ? c.to_string() : "(" + c.to_string() + ")";
    if (w.empty()) {
      out += coeff;
    } else if (c.is_one()) {
      out += "[" + w.to_string() + "]";
    } else {
      out += coeff + "*[" + w.to_string() + "]";
    }
  }
  return out;
}

}  // namespace tensorbraid
