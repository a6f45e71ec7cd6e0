#include "orbk/fingroup.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>

#include "orbk/error.hpp"

namespace orbk {

namespace {

std::vector<std::uint32_t> invert_permutation(const std::vector<std::uint32_t>& p) {
  std::vector<std::uint32_t> inv(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

}  // namespace

std::size_t EigenvalueProfile::dimension() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
}

FiniteMatrixGroup FiniteMatrixGroup::close(std::size_t dimension, unsigned conductor,
                                           std::span<const Matrix> generators, std::size_t cap) {
  if (cap == 0) throw Error(ErrorCode::InvalidArgument, "cap must be positive");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Matrix& g = generators[k];
    if (g.dimension() != dimension) {
      throw Error(ErrorCode::DimensionMismatch, "generator " + std::to_string(k) + " has dimension " +
                                                    std::to_string(g.dimension()));
    }
    if (g.conductor() != conductor) {
      throw Error(ErrorCode::ConductorMismatch, "generator " + std::to_string(k) + " has conductor " +
                                                    std::to_string(g.conductor()));
    }
    if (determinant(g).is_zero()) {
      throw Error(ErrorCode::NonInvertibleGenerator, "generator " + std::to_string(k) + " is singular");
    }
  }

  // Closure in discovery order.
  const std::size_t ngen = generators.size();
  std::vector<Matrix> found{Matrix::identity(dimension, conductor)};
  std::unordered_map<Matrix, std::uint32_t, MatrixHash> index{{found.front(), 0}};
  std::vector<std::uint32_t> parent{0}, parent_gen{0};
  std::vector<std::vector<std::uint32_t>> right(ngen);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t k = 0; k < ngen; ++k) {
      Matrix next = found[i] * generators[k];
      auto [it, inserted] = index.try_emplace(std::move(next), static_cast<std::uint32_t>(found.size()));
      if (inserted) {
        if (found.size() >= cap) {
          throw Error(ErrorCode::CapExceeded,
                      "closure exceeded cap of " + std::to_string(cap) + " elements");
        }
        found.push_back(it->first);
        parent.push_back(static_cast<std::uint32_t>(i));
        parent_gen.push_back(static_cast<std::uint32_t>(k));
      }
      right[k].push_back(it->second);
    }
  }

  const std::size_t order = found.size();
  // Matrices are distinct as elements of GL(n), so the action on C^n is
  // faithful; this guards the bookkeeping that relies on it.
  for (std::size_t i = 1; i < order; ++i) {
    if (found[i].is_identity()) {
      throw Error(ErrorCode::NonEffectiveAction, "non-identity element acts trivially");
    }
  }

  // Canonical order: identity first, others lexicographic.
  std::vector<std::uint32_t> sorted(order);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin() + 1, sorted.end(),
            [&](std::uint32_t a, std::uint32_t b) { return compare(found[a], found[b]) < 0; });
  std::vector<std::uint32_t> to_new(order);
  for (std::uint32_t i = 0; i < order; ++i) to_new[sorted[i]] = i;

  FiniteMatrixGroup g;
  g.dimension_ = dimension;
  g.conductor_ = conductor;
  g.elements_.reserve(order);
  for (auto old : sorted) g.elements_.push_back(found[old]);
  g.index_.reserve(order);
  for (std::uint32_t i = 0; i < order; ++i) g.index_.emplace(g.elements_[i], i);

  g.right_.assign(ngen, std::vector<std::uint32_t>(order));
  for (std::size_t k = 0; k < ngen; ++k) {
    for (std::uint32_t old = 0; old < order; ++old) g.right_[k][to_new[old]] = to_new[right[k][old]];
    g.right_inv_.push_back(invert_permutation(g.right_[k]));
  }
  g.parent_.resize(order);
  g.parent_gen_.resize(order);
  g.bfs_order_.resize(order);
  g.words_.resize(order);
  for (std::uint32_t old = 0; old < order; ++old) {
    const std::uint32_t i = to_new[old];
    g.bfs_order_[old] = i;
    g.parent_[i] = to_new[parent[old]];
    g.parent_gen_[i] = parent_gen[old];
    if (old != 0) {
      g.words_[i] = g.words_[g.parent_[i]];
      g.words_[i].push_back(parent_gen[old]);
    }
  }
  for (const auto& gen : generators) g.generators_.push_back(g.index_.at(gen));

  // gen * (p * s) = (gen * p) * s along the spanning tree.
  g.left_.assign(ngen, std::vector<std::uint32_t>(order));
  for (std::size_t k = 0; k < ngen; ++k) {
    auto& row = g.left_[k];
    for (std::size_t pos = 0; pos < order; ++pos) {
      const std::uint32_t i = g.bfs_order_[pos];
      row[i] = pos == 0 ? static_cast<std::uint32_t>(g.generators_[k])
                        : g.right_[g.parent_gen_[i]][row[g.parent_[i]]];
    }
    g.left_inv_.push_back(invert_permutation(row));
  }

  if (order <= kMultiplicationTableLimit) {
    g.table_.resize(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      std::uint32_t* row = g.table_.data() + a * order;
      for (std::size_t pos = 0; pos < order; ++pos) {
        const std::uint32_t b = g.bfs_order_[pos];
        row[b] = pos == 0 ? static_cast<std::uint32_t>(a) : g.right_[g.parent_gen_[b]][row[g.parent_[b]]];
      }
    }
  }

  g.inverse_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::uint32_t x = 0;
    const Word& w = g.words_[a];
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = g.right_inv_[*it][x];
    g.inverse_[a] = x;
  }

  for (std::size_t i = 0; i < ngen && g.abelian_; ++i) {
    for (std::size_t j = 0; j < ngen; ++j) {
      if (g.right_[j][g.generators_[i]] != g.left_[j][g.generators_[i]]) {
        g.abelian_ = false;
        break;
      }
    }
  }

  // Orders: walking the powers of a gives the orders of all its powers.
  g.orders_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    if (g.orders_[a] != 0) continue;
    std::vector<ElementIndex> powers{0};
    ElementIndex x = a;
    while (x != 0) {
      powers.push_back(x);
      x = g.multiply(x, a);
    }
    const std::size_t m = powers.size();
    for (std::size_t k = 1; k < m; ++k) g.orders_[powers[k]] = m / std::gcd(k, m);
    g.orders_[0] = 1;
  }

  // Conjugacy classes as orbits of x -> gen x gen^-1; scanning in index order
  // makes each representative the minimum of its class.
  g.class_of_.assign(order, static_cast<std::size_t>(-1));
  for (std::size_t start = 0; start < order; ++start) {
    if (g.class_of_[start] != static_cast<std::size_t>(-1)) continue;
    const std::size_t c = g.class_members_.size();
    std::vector<ElementIndex> members{start};
    g.class_of_[start] = c;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (std::size_t k = 0; k < ngen; ++k) {
        const std::uint32_t y = g.left_[k][g.right_inv_[k][members[head]]];
        if (g.class_of_[y] == static_cast<std::size_t>(-1)) {
          g.class_of_[y] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    g.class_members_.push_back(std::move(members));
  }
  return g;
}

std::optional<ElementIndex> FiniteMatrixGroup::find(const Matrix& m) const {
  if (m.dimension() != dimension_ || m.conductor() != conductor_) return std::nullopt;
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex FiniteMatrixGroup::multiply(ElementIndex a, ElementIndex b) const {
  const std::size_t n = order();
  if (a >= n || b >= n) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  if (!table_.empty()) return table_[a * n + b];
  std::uint32_t x = static_cast<std::uint32_t>(a);
  for (auto k : words_[b]) x = right_[k][x];
  return x;
}

ElementIndex FiniteMatrixGroup::power(ElementIndex a, std::int64_t k) const {
  const auto m = static_cast<std::int64_t>(element_order(a));
  const std::int64_t e = ((k % m) + m) % m;
  ElementIndex x = 0;
  for (std::int64_t i = 0; i < e; ++i) x = multiply(x, a);
  return x;
}

ElementIndex FiniteMatrixGroup::conjugate(ElementIndex h, ElementIndex g) const {
  return multiply(multiply(h, g), inverse(h));
}

ElementIndex FiniteMatrixGroup::evaluate(const Word& w) const {
  std::uint32_t x = 0;
  for (auto k : w) {
    if (k >= generators_.size()) {
      throw Error(ErrorCode::InvalidArgument, "word letter " + std::to_string(k) + " is not a generator");
    }
    x = right_[k][x];
  }
  return x;
}

std::vector<ElementIndex> FiniteMatrixGroup::centralizer(ElementIndex r) const {
  const std::size_t n = order();
  if (r >= n) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  std::vector<ElementIndex> out;
  if (abelian_) {
    out.resize(n);
    std::iota(out.begin(), out.end(), ElementIndex{0});
    return out;
  }
  // phi(h) = h^-1 r h, and phi(p s) = s^-1 phi(p) s along the spanning tree.
  std::vector<std::uint32_t> phi(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::uint32_t h = bfs_order_[pos];
    if (pos == 0) {
      phi[h] = static_cast<std::uint32_t>(r);
      continue;
    }
    const auto s = parent_gen_[h];
    phi[h] = right_[s][left_inv_[s][phi[parent_[h]]]];
  }
  for (std::size_t h = 0; h < n; ++h) {
    if (phi[h] == r) out.push_back(h);
  }
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteMatrixGroup& group) {
  std::vector<ConjugacyClass> out;
  out.reserve(group.class_count());
  for (std::size_t c = 0; c < group.class_count(); ++c) {
    ConjugacyClass cls;
    cls.representative = group.class_representative(c);
    cls.members = group.class_members(c);
    cls.centralizer = group.centralizer(cls.representative);
    cls.order = group.element_order(cls.representative);
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<ElementIndex> centralizer(const FiniteMatrixGroup& group, ElementIndex g) {
  return group.centralizer(g);
}

EigenvalueProfile eigenvalue_profile(const FiniteMatrixGroup& group, ElementIndex g) {
  const std::size_t m = group.element_order(g);
  const auto lifted = static_cast<unsigned>(std::lcm<std::size_t>(group.conductor(), m));
  const std::int64_t step = lifted / static_cast<std::int64_t>(m);

  std::vector<Cyclotomic> traces;
  traces.reserve(m);
  ElementIndex x = 0;
  for (std::size_t j = 0; j < m; ++j) {
    traces.push_back(group.element(x).trace().embed(lifted));
    x = group.multiply(x, g);
  }

  EigenvalueProfile profile;
  profile.order = m;
  profile.multiplicities.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    Cyclotomic sum = Cyclotomic::zero(lifted);
    for (std::size_t j = 0; j < m; ++j) {
      const auto e = -static_cast<std::int64_t>((k * j) % m) * step;
      sum += Cyclotomic::root_of_unity(lifted, e) * traces[j];
    }
    sum = sum.scaled(Rational(1, static_cast<unsigned long>(m)));
    if (!sum.is_rational() || !is_integral(sum.rational_part()) || sgn(sum.rational_part()) < 0) {
      throw Error(ErrorCode::InternalInconsistency,
                  "eigenvalue multiplicity " + sum.to_expression() + " is not a nonnegative integer");
    }
    profile.multiplicities[k] = sum.rational_part().get_num().get_ui();
  }
  if (profile.dimension() != group.dimension()) {
    throw Error(ErrorCode::InternalInconsistency, "eigenvalue multiplicities do not sum to dimension");
  }
  return profile;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty()) return w;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = text.find('.', start);
    const std::string_view letter = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(letter.data(), letter.data() + letter.size(), value);
    if (letter.empty() || ec != std::errc{} || ptr != letter.data() + letter.size()) {
      throw Error(ErrorCode::SyntaxError, "malformed word '" + std::string(text) + "'");
    }
    w.push_back(value);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace orbk
