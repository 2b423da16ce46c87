#include "metalie/groebner.hpp"

#include <algorithm>

#include "metalie/error.hpp"

namespace metalie {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

const ModuleVector* find_reducer(const ModuleVector& v, const std::vector<ModuleVector>& basis,
                                 std::size_t skip = static_cast<std::size_t>(-1)) {
  const std::size_t idx = v.lead_index();
  const Monomial& m = v.lead_term().mono;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == skip) continue;
    const auto& g = basis[k];
    if (g.lead_index() == idx && g.lead_term().mono.divides(m)) return &g;
  }
  return nullptr;
}

// Basis elements are monic.
ModuleVector top_reduce(ModuleVector v, const std::vector<ModuleVector>& basis) {
  while (!v.is_zero()) {
    const ModuleVector* g = find_reducer(v, basis);
    if (!g) break;
    v = v.sub_mul_term(*g, v.lead_term().mono.divide(g->lead_term().mono), v.lead_term().coeff);
  }
  return v;
}

ModuleVector full_reduce(ModuleVector v, const std::vector<ModuleVector>& basis,
                         std::size_t skip = static_cast<std::size_t>(-1)) {
  ModuleVector rem(v.ring(), v.width());
  while (!v.is_zero()) {
    const ModuleVector* g = find_reducer(v, basis, skip);
    if (g) {
      v = v.sub_mul_term(*g, v.lead_term().mono.divide(g->lead_term().mono), v.lead_term().coeff);
    } else {
      ModuleVector t(v.ring(), v.width());
      t.set(v.lead_index(), Polynomial::monomial(v.ring(), v.lead_term().mono, v.lead_term().coeff));
      rem += t;
      v.drop_lead_term();
    }
  }
  return rem;
}

bool pair_less(const Pair& a, const Pair& b, const std::vector<ModuleVector>& basis) {
  if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
  std::size_t ia = basis[a.i].lead_index(), ib = basis[b.i].lead_index();
  if (ia != ib) return ia > ib;
  int c = compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

}  // namespace

std::vector<ModuleVector> GroebnerBasis::buchberger(std::size_t width, std::vector<ModuleVector> gens) {
  (void)width;
  std::vector<ModuleVector> basis;
  std::vector<Pair> pairs;

  auto add = [&](ModuleVector h) {
    h = h.monic();
    const std::size_t t = basis.size();
    const std::size_t idx = h.lead_index();
    const Monomial& lh = h.lead_term().mono;

    std::erase_if(pairs, [&](const Pair& pr) {
      if (basis[pr.i].lead_index() != idx || !lh.divides(pr.lcm)) return false;
      Monomial li = basis[pr.i].lead_term().mono.lcm(lh);
      Monomial lj = basis[pr.j].lead_term().mono.lcm(lh);
      return !(li == pr.lcm) && !(lj == pr.lcm);
    });

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < t; ++i)
      if (basis[i].lead_index() == idx) fresh.push_back({i, t, basis[i].lead_term().mono.lcm(lh)});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (a == b) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm)) {
          if (!(fresh[b].lcm == fresh[a].lcm)) drop = true;
          else if (b < a) drop = true;
        }
      }
      if (!drop) kept.push_back(fresh[a]);
    }
    pairs.insert(pairs.end(), kept.begin(), kept.end());
    basis.push_back(std::move(h));
  };

  for (auto& g : gens) {
    ModuleVector r = top_reduce(std::move(g), basis);
    if (!r.is_zero()) add(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const Pair& a, const Pair& b) { return pair_less(a, b, basis); });
    Pair pr = *best;
    pairs.erase(best);
    const ModuleVector& gi = basis[pr.i];
    const ModuleVector& gj = basis[pr.j];
    const Field& k = gi.ring().field();
    ModuleVector s(gi.ring(), gi.width());
    s = s.sub_mul_term(gi, pr.lcm.divide(gi.lead_term().mono), k.neg(1));
    s = s.sub_mul_term(gj, pr.lcm.divide(gj.lead_term().mono), 1);
    ModuleVector r = top_reduce(std::move(s), basis);
    if (!r.is_zero()) add(std::move(r));
  }
  return basis;
}

std::vector<ModuleVector> GroebnerBasis::make_reduced(std::vector<ModuleVector> basis) {
  std::vector<ModuleVector> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || basis[j].lead_index() != basis[i].lead_index()) continue;
      const Monomial& mi = basis[i].lead_term().mono;
      const Monomial& mj = basis[j].lead_term().mono;
      if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<ModuleVector> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    // The leading term cannot be reduced by the others, so only the tail moves.
    ModuleVector v = full_reduce(minimal[i], minimal, i);
    reduced.push_back(v.monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const ModuleVector& a, const ModuleVector& b) { return compare_leads(a, b) > 0; });
  return reduced;
}

GroebnerBasis GroebnerBasis::compute(const Ring& ring, std::size_t width,
                                     const std::vector<ModuleVector>& generators) {
  GroebnerBasis gb(ring, width);
  std::vector<ModuleVector> gens;
  for (const auto& g : generators) {
    if (!(g.ring() == ring) || g.width() != width) throw ConfigurationError("generator of wrong shape");
    if (!g.is_zero()) gens.push_back(g);
  }
  gb.elements_ = make_reduced(buchberger(width, std::move(gens)));
  return gb;
}

ModuleVector GroebnerBasis::reduce(const ModuleVector& v) const {
  if (!(v.ring() == ring_) || v.width() != width_) throw ConfigurationError("vector of wrong shape for reduction");
  return full_reduce(v, elements_);
}

bool GroebnerBasis::is_standard(std::size_t index, const Monomial& m) const {
  for (const auto& g : elements_)
    if (g.lead_index() == index && g.lead_term().mono.divides(m)) return false;
  return true;
}

bool GroebnerBasis::homogeneous() const {
  for (const auto& g : elements_) {
    int d = -1;
    for (const auto& [i, f] : g.entries())
      for (const auto& t : f.terms()) {
        int td = static_cast<int>(t.mono.degree());
        if (d < 0) d = td;
        else if (d != td) return false;
      }
  }
  return true;
}

std::vector<ModuleVector> groebner(const std::vector<ModuleVector>& rows) {
  if (rows.empty()) return {};
  return GroebnerBasis::compute(rows.front().ring(), rows.front().width(), rows).elements();
}

ReduceResult reduce(const ModuleVector& v, const GroebnerBasis& gb) {
  ModuleVector nf = gb.reduce(v);
  bool member = nf.is_zero();
  return {std::move(nf), member};
}

Lifter::Lifter(const Ring& ring, std::size_t width, std::vector<ModuleVector> generators,
               std::vector<ModuleVector> relations)
    : ring_(ring),
      width_(width),
      generators_(std::move(generators)),
      relations_(std::move(relations)),
      augmented_(ring, width + generators_.size()) {
  const std::size_t k = generators_.size();
  std::vector<ModuleVector> aug;
  aug.reserve(k + relations_.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (!(generators_[i].ring() == ring) || generators_[i].width() != width)
      throw ConfigurationError("lift generator of wrong shape");
    aug.push_back(concat(generators_[i], ModuleVector::unit(ring, k, i)));
  }
  for (const auto& rel : relations_) {
    if (!(rel.ring() == ring) || rel.width() != width) throw ConfigurationError("lift relation of wrong shape");
    aug.push_back(rel.shifted(0, width + k));
  }
  augmented_ = GroebnerBasis::compute(ring, width + k, aug);
}

std::optional<std::vector<Polynomial>> Lifter::lift(const ModuleVector& target) const {
  if (!(target.ring() == ring_) || target.width() != width_) throw ConfigurationError("lift target of wrong shape");
  const std::size_t k = generators_.size();
  ModuleVector r = augmented_.reduce(target.shifted(0, width_ + k));
  if (!r.slice(0, width_).is_zero()) return std::nullopt;
  return (-r.slice(width_, width_ + k)).dense();
}

bool Lifter::in_span(const ModuleVector& target) const { return lift(target).has_value(); }

std::vector<ModuleVector> Lifter::syzygies() const {
  std::vector<ModuleVector> out;
  for (const auto& g : augmented_.elements())
    if (g.lead_index() >= width_) out.push_back(g.slice(width_, width_ + generators_.size()));
  return out;
}

GroebnerBasis Lifter::span_basis() const {
  std::vector<ModuleVector> all = generators_;
  all.insert(all.end(), relations_.begin(), relations_.end());
  return GroebnerBasis::compute(ring_, width_, all);
}

}  // namespace metalie
