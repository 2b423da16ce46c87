#include "metalie/presentation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "metalie/error.hpp"

namespace metalie {

struct ModulePresentation::Cache {
  std::once_flag basis_once;
  std::optional<GroebnerBasis> basis;
  std::once_flag rank_once;
  std::size_t rank = 0;
};

ModulePresentation::ModulePresentation(const Ring& ring, std::size_t generators, std::vector<ModuleVector> relations)
    : ring_(ring), n_(generators), cache_(std::make_shared<Cache>()) {
  for (auto& rel : relations) {
    if (!(rel.ring() == ring) || rel.width() != generators)
      throw ConfigurationError("relation row of wrong width");
    if (!rel.is_zero()) relations_.push_back(std::move(rel));
  }
}

const GroebnerBasis& ModulePresentation::basis() const {
  std::call_once(cache_->basis_once,
                 [this] { cache_->basis = GroebnerBasis::compute(ring_, n_, relations_); });
  return *cache_->basis;
}

std::size_t ModulePresentation::rank() const {
  std::call_once(cache_->rank_once,
                 [this] { cache_->rank = n_ - fraction_free_rank(ring_, relation_matrix(), n_).rank; });
  return cache_->rank;
}

PolyMatrix ModulePresentation::relation_matrix() const {
  PolyMatrix a;
  a.reserve(relations_.size());
  for (const auto& rel : relations_) a.push_back(rel.dense());
  return a;
}

bool ModulePresentation::is_zero_module() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!is_zero_element(generator(i))) return false;
  return true;
}

ModulePresentation ModulePresentation::direct_sum(const ModulePresentation& o) const {
  if (!(ring_ == o.ring_)) throw ConfigurationError("direct sum of modules over different rings");
  std::size_t w = n_ + o.n_;
  std::vector<ModuleVector> rels;
  for (const auto& r : relations_) rels.push_back(r.shifted(0, w));
  for (const auto& r : o.relations_) rels.push_back(r.shifted(n_, w));
  return ModulePresentation(ring_, w, std::move(rels));
}

ModulePresentation ModulePresentation::with_relations(const std::vector<ModuleVector>& extra) const {
  std::vector<ModuleVector> rels = relations_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return ModulePresentation(ring_, n_, std::move(rels));
}

std::string ModulePresentation::to_string() const {
  std::ostringstream out;
  out << ring_.p() << ' ' << ring_.nvars() << ' ' << n_ << '\n';
  for (const auto& rel : relations_) {
    auto comps = rel.dense();
    for (std::size_t i = 0; i < comps.size(); ++i) out << (i ? "; " : "") << comps[i].to_string();
    out << '\n';
  }
  return out.str();
}

std::size_t rank(const ModulePresentation& m) { return m.rank(); }

GroebnerBasis module_quotient(const GroebnerBasis& n, const Polynomial& h) {
  const std::size_t w = n.width();
  std::vector<ModuleVector> gens;
  gens.reserve(w);
  for (std::size_t j = 0; j < w; ++j) gens.push_back(ModuleVector::unit(n.ring(), w, j) * h);
  Lifter lifter(n.ring(), w, std::move(gens), n.elements());
  return GroebnerBasis::compute(n.ring(), w, lifter.syzygies());
}

GroebnerBasis saturation(const GroebnerBasis& n, const Polynomial& h) {
  if (h.is_zero()) throw ConfigurationError("saturation by the zero polynomial");
  GroebnerBasis cur = n;
  for (;;) {
    GroebnerBasis next = module_quotient(cur, h);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

MinorSelection torsion_minor(const ModulePresentation& m) {
  return fraction_free_rank(m.ring(), m.relation_matrix(), m.generators());
}

ModulePresentation torsion_submodule(const ModulePresentation& m, const Polynomial& minor) {
  if (m.relations().empty() || fraction_free_rank(m.ring(), m.relation_matrix(), m.generators()).rank == 0)
    return m;
  GroebnerBasis sat = saturation(m.basis(), minor);
  return ModulePresentation(m.ring(), m.generators(), sat.elements());
}

ModulePresentation torsion_submodule(const ModulePresentation& m) {
  MinorSelection sel = torsion_minor(m);
  if (sel.rank == 0) return m;
  return torsion_submodule(m, sel.minor);
}

bool is_torsion_free(const ModulePresentation& m) {
  ModulePresentation t = torsion_submodule(m);
  for (const auto& g : t.relations())
    if (!m.is_zero_element(g)) return false;
  return true;
}

std::optional<TorsionWitness> torsion_witness(const ModulePresentation& m) {
  MinorSelection sel = torsion_minor(m);
  if (sel.rank == 0) return std::nullopt;
  ModulePresentation t = torsion_submodule(m, sel.minor);
  for (const auto& g : t.relations()) {
    ModuleVector nf = m.normal_form(g);
    if (nf.is_zero()) continue;
    Polynomial f = sel.minor;
    while (!m.is_zero_element(nf * f)) f *= sel.minor;
    return TorsionWitness{nf, f};
  }
  return std::nullopt;
}

std::vector<ModuleVector> map_kernel(const Ring& ring, std::size_t n, const std::vector<ModuleVector>& images,
                                     std::size_t s) {
  if (images.size() != n) throw ConfigurationError("one image per generator is required");
  if (s == 0) {
    std::vector<ModuleVector> all;
    for (std::size_t j = 0; j < n; ++j) all.push_back(ModuleVector::unit(ring, n, j));
    return all;
  }
  Lifter lifter(ring, s, images);
  return lifter.syzygies();
}

FreeEmbedding embed_into_free(const ModulePresentation& m) {
  if (!is_torsion_free(m)) throw TorsionInput("module has torsion; no embedding into a free module exists");
  const Ring& ring = m.ring();
  const std::size_t n = m.generators();
  MinorSelection sel = torsion_minor(m);
  const std::size_t s = n - sel.rank;
  PolyMatrix a = m.relation_matrix();

  std::vector<bool> pivot(n, false);
  for (std::size_t c : sel.cols) pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) free_cols.push_back(c);

  // Column f of the map is a null vector of the relation matrix built by Cramer's rule.
  std::vector<std::vector<Polynomial>> w(n, std::vector<Polynomial>(s, Polynomial(ring)));
  PolyMatrix base = submatrix(a, sel.rows, sel.cols);
  for (std::size_t fi = 0; fi < s; ++fi) {
    std::size_t f = free_cols[fi];
    w[f][fi] = sel.minor;
    for (std::size_t k = 0; k < sel.rank; ++k) {
      PolyMatrix replaced = base;
      for (std::size_t r = 0; r < sel.rank; ++r) replaced[r][k] = a[sel.rows[r]][f];
      w[sel.cols[k]][fi] = -determinant(ring, replaced);
    }
  }

  FreeEmbedding emb;
  emb.s = s;
  for (std::size_t j = 0; j < n; ++j) emb.images.push_back(ModuleVector::from_dense(ring, w[j]));

  for (const auto& rel : m.relations()) {
    ModuleVector image(ring, s);
    for (const auto& [j, c] : rel.entries()) image += emb.images[j] * c;
    if (!image.is_zero()) throw Error("embedding does not annihilate a relation");
  }
  for (const auto& k : map_kernel(ring, n, emb.images, s))
    if (!m.is_zero_element(k)) throw Error("embedding is not injective");
  return emb;
}

namespace {

std::size_t checked_power(std::size_t p, std::size_t e, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (total > cap / p) throw ResourceError("module enumeration exceeds cap " + std::to_string(cap));
    total *= p;
  }
  if (total > cap) throw ResourceError("module enumeration exceeds cap " + std::to_string(cap));
  return total;
}

// Every combination of the given module monomials with coefficients in GF(p).
std::vector<ModuleVector> combinations(const Ring& ring, std::size_t width,
                                       const std::vector<std::pair<std::size_t, Monomial>>& support,
                                       std::size_t cap) {
  const std::uint32_t p = ring.p();
  std::size_t total = checked_power(p, support.size(), cap);
  std::vector<ModuleVector> out;
  out.reserve(total);
  std::vector<Coeff> digits(support.size(), 0);
  for (;;) {
    std::vector<std::vector<Term>> comps(width);
    for (std::size_t i = 0; i < support.size(); ++i)
      if (digits[i]) comps[support[i].first].push_back({support[i].second, digits[i]});
    ModuleVector v(ring, width);
    for (std::size_t c = 0; c < width; ++c)
      if (!comps[c].empty()) v.set(c, Polynomial::from_terms(ring, std::move(comps[c])));
    out.push_back(std::move(v));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

}  // namespace

std::vector<ModuleVector> enumerate_module_elements(const ModulePresentation& m, unsigned degree_bound,
                                                    std::size_t cap) {
  const Ring& ring = m.ring();
  const std::size_t n = m.generators();
  const GroebnerBasis& gb = m.basis();
  auto monos = monomials_up_to(ring.nvars(), degree_bound);
  if (gb.homogeneous()) {
    std::vector<std::pair<std::size_t, Monomial>> support;
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& mono : monos)
        if (gb.is_standard(c, mono)) support.emplace_back(c, mono);
    return combinations(ring, n, support, cap);
  }
  std::vector<std::pair<std::size_t, Monomial>> support;
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& mono : monos) support.emplace_back(c, mono);
  std::map<std::string, ModuleVector> seen;
  for (auto& v : combinations(ring, n, support, cap)) {
    ModuleVector nf = gb.reduce(v);
    seen.emplace(nf.to_string(), std::move(nf));
  }
  std::vector<ModuleVector> out;
  out.reserve(seen.size());
  for (auto& [key, v] : seen) out.push_back(std::move(v));
  return out;
}

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos) {
      auto last = line.find_last_not_of(" \t\r");
      lines.push_back(line.substr(first, last - first + 1));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

ModulePresentation relations_from_lines(const std::vector<std::string>& lines, std::size_t first,
                                        const Ring& ring, std::size_t n) {
  std::vector<ModuleVector> rels;
  for (std::size_t li = first; li < lines.size(); ++li) {
    std::vector<Polynomial> comps;
    std::string_view line = lines[li];
    std::size_t start = 0;
    for (;;) {
      std::size_t sep = line.find(';', start);
      std::string_view piece = line.substr(start, sep == std::string_view::npos ? std::string_view::npos : sep - start);
      try {
        comps.push_back(parse_polynomial(piece, ring));
      } catch (const SyntaxError& e) {
        throw InputError("relation " + std::to_string(li - first + 1) + ": " + e.what());
      }
      if (sep == std::string_view::npos) break;
      start = sep + 1;
    }
    if (comps.size() != n)
      throw InputError("relation " + std::to_string(li - first + 1) + " has " + std::to_string(comps.size()) +
                       " components, expected " + std::to_string(n));
    rels.push_back(ModuleVector::from_dense(ring, comps));
  }
  return ModulePresentation(ring, n, std::move(rels));
}

}  // namespace

ModulePresentation parse_relations(std::string_view text, const Ring& ring, std::size_t n) {
  return relations_from_lines(content_lines(text), 0, ring, n);
}

ModulePresentation parse_presentation(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw InputError("module file is empty; expected header 'p r n'");
  std::istringstream header(lines.front());
  long long p = 0, r = 0, n = 0;
  std::string extra;
  if (!(header >> p >> r >> n) || (header >> extra))
    throw InputError("malformed module header '" + lines.front() + "'; expected 'p r n'");
  if (p < 2 || r < 0 || n < 0 || r > static_cast<long long>(kMaxVars) || n > 4096)
    throw InputError("module header values out of range");
  std::optional<Ring> ring;
  try {
    ring.emplace(static_cast<std::uint32_t>(p), static_cast<std::size_t>(r));
  } catch (const ConfigurationError& e) {
    throw InputError(e.what());
  }
  return relations_from_lines(lines, 1, *ring, static_cast<std::size_t>(n));
}

}  // namespace metalie
