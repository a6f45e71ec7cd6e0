#include "orbk/goodmaps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "orbk/error.hpp"

namespace orbk {

namespace {

std::vector<ElementIndex> generate_subgroup(const FiniteMatrixGroup& group, const std::vector<ElementIndex>& gens) {
  std::vector<bool> seen(group.order(), false);
  std::vector<ElementIndex> out{0};
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto s : gens) {
      const ElementIndex y = group.multiply(out[head], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool acts_trivially(const Matrix& m, const std::vector<std::vector<Cyclotomic>>& basis) {
  return std::all_of(basis.begin(), basis.end(), [&](const auto& v) { return apply(m, v) == v; });
}

class SplittingSearch {
 public:
  SplittingSearch(const FiniteMatrixGroup& group, const SplittingProblem& problem,
                  const std::vector<ElementIndex>& quotient_generators)
      : group_(group), problem_(problem), qgens_(quotient_generators), in_kernel_(group.order(), false) {
    for (auto k : problem.kernel) in_kernel_[k] = true;
  }

  std::vector<Splitting> run() {
    std::vector<ElementIndex> images;
    extend(images);
    return std::move(found_);
  }

 private:
  void extend(std::vector<ElementIndex>& images) {
    const auto image = generate_subgroup(group_, images);
    const std::size_t meets_kernel =
        std::count_if(image.begin(), image.end(), [&](ElementIndex x) { return in_kernel_[x]; });
    if (meets_kernel != 1) return;
    if (images.size() == qgens_.size()) {
      if (image.size() == problem_.quotient_order) found_.push_back(Splitting{images, image});
      return;
    }
    const ElementIndex q = qgens_[images.size()];
    for (auto k : problem_.kernel) {
      images.push_back(group_.multiply(q, k));
      extend(images);
      images.pop_back();
    }
  }

  const FiniteMatrixGroup& group_;
  const SplittingProblem& problem_;
  const std::vector<ElementIndex>& qgens_;
  std::vector<bool> in_kernel_;
  std::vector<Splitting> found_;
};

// Coset label of x in C(g)/K_g: the least element of x K_g.
ElementIndex coset_label(const FiniteMatrixGroup& group, const SplittingProblem& problem, ElementIndex x) {
  ElementIndex best = group.multiply(x, problem.kernel.front());
  for (auto k : problem.kernel) best = std::min(best, group.multiply(x, k));
  return best;
}

void verify_splitting(const FiniteMatrixGroup& group, const SplittingProblem& problem,
                      const std::vector<ElementIndex>& qgens, const Splitting& s) {
  // lambda(coset(x)) = x for x in the image; pi o lambda = id holds iff the
  // image meets every coset exactly once.
  std::map<ElementIndex, ElementIndex> lambda;
  for (auto x : s.image) lambda.emplace(coset_label(group, problem, x), x);
  bool ok = lambda.size() == problem.quotient_order && s.image.size() == problem.quotient_order;
  for (std::size_t i = 0; ok && i < qgens.size(); ++i) {
    ok = lambda.at(coset_label(group, problem, qgens[i])) == s.generator_images[i];
  }
  for (auto x : s.image) {
    for (auto y : s.image) {
      if (!ok) break;
      const ElementIndex q = coset_label(group, problem, group.multiply(x, y));
      ok = lambda.count(q) && lambda.at(q) == group.multiply(x, y);
    }
  }
  if (!ok) throw Error(ErrorCode::InternalInconsistency, "splitting fails pi o s = id");
}

}  // namespace

SplittingProblem splitting_problem(const FiniteMatrixGroup& group, ElementIndex g) {
  if (g >= group.order()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  if (g == 0) throw Error(ErrorCode::IdentityElement, "goodness needs a non-identity element");
  SplittingProblem p;
  p.element = g;
  const Matrix& m = group.element(g);
  p.fixed_basis = kernel_basis(m - Matrix::identity(m.dimension(), m.conductor()));
  if (p.fixed_basis.empty()) {
    throw Error(ErrorCode::TrivialFixedSpace, "element " + format_word(group.word(g)) + " fixes only the origin");
  }
  p.centralizer = group.centralizer(g);
  for (auto c : p.centralizer) {
    if (acts_trivially(group.element(c), p.fixed_basis)) p.kernel.push_back(c);
  }
  std::vector<bool> in_kernel(group.order(), false);
  for (auto k : p.kernel) in_kernel[k] = true;
  for (auto c : p.centralizer) {
    for (auto k : p.kernel) {
      if (!in_kernel[group.conjugate(c, k)]) {
        throw Error(ErrorCode::InternalInconsistency, "kernel of the fixed-space action is not normal");
      }
    }
  }
  p.quotient_order = p.centralizer.size() / p.kernel.size();
  return p;
}

GoodnessVerdict fixed_locus_goodness(const FiniteMatrixGroup& group, ElementIndex g) {
  GoodnessVerdict v;
  v.problem = splitting_problem(group, g);
  const auto& p = v.problem;

  std::vector<ElementIndex> span = p.kernel;
  std::vector<bool> covered(group.order(), false);
  for (auto k : p.kernel) covered[k] = true;
  for (auto c : p.centralizer) {
    if (covered[c]) continue;
    v.quotient_generators.push_back(c);
    span.push_back(c);
    for (auto x : generate_subgroup(group, span)) covered[x] = true;
  }

  v.splittings = SplittingSearch(group, p, v.quotient_generators).run();
  for (const auto& s : v.splittings) verify_splitting(group, p, v.quotient_generators, s);
  v.good = !v.splittings.empty();

  std::map<std::vector<ElementIndex>, std::size_t> seen;
  for (const auto& s : v.splittings) {
    if (seen.count(s.generator_images)) continue;
    const std::size_t id = v.classes++;
    for (auto k : p.kernel) {
      std::vector<ElementIndex> conj;
      for (auto x : s.generator_images) conj.push_back(group.conjugate(k, x));
      seen.emplace(std::move(conj), id);
    }
  }
  return v;
}

CompatibleSystemSet find_equivariant_lifts(const FiniteMatrixGroup& group, const LiftProblem& problem) {
  const std::size_t n = group.dimension();
  std::vector<bool> in_w(n, false);
  for (auto a : problem.axes) {
    if (a >= n || in_w[a]) throw Error(ErrorCode::InvalidArgument, "axes must be distinct coordinates below " + std::to_string(n));
    in_w[a] = true;
  }
  if (problem.axes.empty()) throw Error(ErrorCode::InvalidArgument, "subspace needs at least one axis");
  if (problem.order < 2) throw Error(ErrorCode::InvalidArgument, "lift order must be >= 2");
  const auto m = static_cast<std::int64_t>(problem.order);
  const std::int64_t k = ((problem.character % m) + m) % m;
  if (std::gcd(k, m) != 1) {
    throw Error(ErrorCode::InvalidArgument, "character " + std::to_string(k) + "/" + std::to_string(m) +
                                                " is not primitive");
  }
  const auto lifted = static_cast<unsigned>(std::lcm<std::int64_t>(group.conductor(), m));
  const Cyclotomic scalar = Cyclotomic::root_of_unity(lifted, k * (lifted / m));

  const auto preserves_w = [&](ElementIndex h, const Cyclotomic& diag) {
    const Matrix& x = group.element(h);
    for (auto col : problem.axes) {
      for (std::size_t row = 0; row < n; ++row) {
        const Cyclotomic& e = x(row, col);
        if (row == col ? !(e.embed(lifted) == diag) : !e.is_zero()) return false;
      }
    }
    return true;
  };

  std::vector<ElementIndex> candidates = problem.within;
  if (candidates.empty()) {
    candidates.resize(group.order());
    std::iota(candidates.begin(), candidates.end(), ElementIndex{0});
  }
  std::sort(candidates.begin(), candidates.end());

  CompatibleSystemSet out;
  const Cyclotomic one = Cyclotomic::one(lifted);
  for (auto h : candidates) {
    if (preserves_w(h, one)) out.stabilizer.push_back(h);
    if (group.element_order(h) == problem.order && preserves_w(h, scalar)) out.lifts.push_back(h);
  }

  std::map<ElementIndex, std::size_t> class_of;
  for (auto h : out.lifts) {
    if (class_of.count(h)) continue;
    std::set<ElementIndex> orbit;
    for (auto s : out.stabilizer) orbit.insert(group.conjugate(s, h));
    for (auto x : orbit) {
      if (!std::binary_search(out.lifts.begin(), out.lifts.end(), x)) {
        throw Error(ErrorCode::InternalInconsistency, "stabilizer conjugation left the lift set");
      }
      class_of[x] = out.classes.size();
    }
    out.classes.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

CompatibleSystemSet enumerate_equivariant_lifts(const FiniteMatrixGroup& group, const LiftProblem& problem) {
  auto out = find_equivariant_lifts(group, problem);
  if (out.lifts.empty()) throw Error(ErrorCode::NoLifts, "no monomorphism realizes the prescribed action");
  return out;
}

std::optional<bool> goodness_via_lifts(const FiniteMatrixGroup& group, ElementIndex g) {
  const SplittingProblem p = splitting_problem(group, g);
  const std::size_t m = p.quotient_order;
  if (m < 2) return std::nullopt;

  std::vector<bool> in_kernel(group.order(), false);
  for (auto k : p.kernel) in_kernel[k] = true;
  std::optional<ElementIndex> generator;
  for (auto c : p.centralizer) {
    std::size_t j = 1;
    for (ElementIndex x = c; !in_kernel[x]; x = group.multiply(x, c)) ++j;
    if (j == m) {
      generator = c;
      break;
    }
  }
  if (!generator) return std::nullopt;

  // H^g must be spanned by standard basis vectors.
  LiftProblem lp;
  for (const auto& v : p.fixed_basis) {
    std::size_t nonzero = 0, axis = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) {
        ++nonzero;
        axis = i;
      }
    }
    if (nonzero != 1 || !v[axis].is_one()) return std::nullopt;
    lp.axes.push_back(axis);
  }
  const Matrix& q = group.element(*generator);
  const Cyclotomic scalar = q(lp.axes.front(), lp.axes.front());
  for (auto a : lp.axes) {
    for (std::size_t row = 0; row < group.dimension(); ++row) {
      if (row == a ? !(q(row, a) == scalar) : !q(row, a).is_zero()) return std::nullopt;
    }
  }
  const auto k = scalar.root_of_unity_exponent(static_cast<std::int64_t>(m));
  if (!k) return std::nullopt;
  lp.order = m;
  lp.character = *k;
  lp.within = p.centralizer;
  return !find_equivariant_lifts(group, lp).lifts.empty();
}

bool nodal_check(const FiniteMatrixGroup& group, ElementIndex lam_nu, ElementIndex lam_omega) {
  if (lam_nu >= group.order() || lam_omega >= group.order()) {
    throw Error(ErrorCode::InvalidArgument, "element index out of range");
  }
  if (group.element_order(lam_nu) != group.element_order(lam_omega)) {
    throw Error(ErrorCode::OrderMismatch, "nodal branches carry different local groups");
  }
  return group.multiply(lam_nu, lam_omega) == 0;
}

}  // namespace orbk
