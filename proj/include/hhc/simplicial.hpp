#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hhc/algebra.hpp"
#include "hhc/coeff.hpp"

namespace hhc {

/// d_i(σ) = coeff · τ; a missing face is zero.
struct Face {
  Scalar coeff;
  std::size_t index;
};

/// Simplicial k-module with a basis of simplices in each degree.
class SimplicialModel {
 public:
  virtual ~SimplicialModel() = default;
  /// Highest stored degree, nullopt when faces are computed on demand.
  virtual std::optional<std::size_t> max_degree() const = 0;
  virtual std::size_t count(std::size_t n) const = 0;
  /// d_i on the simplex idx of degree n >= 1, 0 <= i <= n.
  virtual std::optional<Face> face(std::size_t n, std::size_t i, std::size_t idx) const = 0;
  virtual std::string describe(std::size_t n, std::size_t idx) const = 0;

  bool has_degree(std::size_t n) const { return !max_degree() || n <= *max_degree(); }
};

using ModelPtr = std::shared_ptr<const SimplicialModel>;

/// Truncated simplicial set with explicit simplex lists, faces and degeneracies.
class SimplicialSlice : public SimplicialModel {
 public:
  enum class Kind { Bar, CyclicBar, CyclicBarUnit, Nerve };

  /// B_n = G^n; d_0 drops g_1, d_i multiplies g_i g_{i+1}, d_n drops g_n.
  static std::shared_ptr<const SimplicialSlice> bar(const FiniteGroup& g, std::size_t max_degree);
  /// N^cy_n = G^{n+1}; d_i multiplies g_i g_{i+1} for i < n, d_n = (g_n g_0, g_1, .., g_{n-1}).
  static std::shared_ptr<const SimplicialSlice> cyclic_bar(const FiniteGroup& g, std::size_t max_degree);
  /// Tuples of the cyclic bar construction with g_0 g_1 .. g_n = e.
  static std::shared_ptr<const SimplicialSlice> cyclic_bar_unit(const FiniteGroup& g, std::size_t max_degree);
  /// B_0 = objects, B_n = composable n-strings of morphisms.
  static std::shared_ptr<const SimplicialSlice> nerve(const AmalgamCategory& c, std::size_t max_degree);

  Kind kind() const noexcept { return kind_; }
  std::optional<std::size_t> max_degree() const override { return max_degree_; }
  std::size_t count(std::size_t n) const override { return simplices_.at(n).size(); }
  std::optional<Face> face(std::size_t n, std::size_t i, std::size_t idx) const override {
    return Face{1, faces_.at(n).at(i).at(idx)};
  }
  std::string describe(std::size_t n, std::size_t idx) const override;

  /// Entries of the simplex: group elements, morphism indices, or {object} in nerve degree 0.
  const std::vector<std::size_t>& simplex(std::size_t n, std::size_t idx) const { return simplices_.at(n).at(idx); }
  std::optional<std::size_t> index_of(std::size_t n, const std::vector<std::size_t>& entries) const;
  std::size_t face_index(std::size_t n, std::size_t i, std::size_t idx) const { return faces_.at(n).at(i).at(idx); }
  /// s_i : degree n -> n + 1, for n < max_degree.
  std::size_t degeneracy(std::size_t n, std::size_t i, std::size_t idx) const {
    return degeneracies_.at(n).at(i).at(idx);
  }
  const FiniteGroup* group() const { return group_ ? &*group_ : nullptr; }
  const AmalgamCategory* category() const { return category_ ? &*category_ : nullptr; }

 private:
  SimplicialSlice() = default;
  static std::shared_ptr<const SimplicialSlice> cyclic_impl(const FiniteGroup& g, std::size_t max_degree,
                                                            bool unit_only);
  void index_all();

  Kind kind_ = Kind::Bar;
  std::size_t max_degree_ = 0;
  std::vector<std::vector<std::vector<std::size_t>>> simplices_;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;         // [n][i][idx]
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies_;  // [n][i][idx]
  std::optional<FiniteGroup> group_;
  std::optional<AmalgamCategory> category_;
};

using SlicePtr = std::shared_ptr<const SimplicialSlice>;

/// The simplicial k-module A^{⊗*} of a based algebra: d_0 drops φ_1, d_i multiplies
/// φ_i φ_{i+1} (possibly zero), d_n drops φ_n, and d_0 = d_1 = ε on A with ε(φ) = 1.
/// Cochains on it are Hom_k(A^{⊗n}, k).
class TensorBar : public SimplicialModel {
 public:
  explicit TensorBar(AlgebraPtr alg) : alg_(std::move(alg)) {}
  const AlgebraPtr& algebra() const noexcept { return alg_; }
  std::optional<std::size_t> max_degree() const override { return std::nullopt; }
  std::size_t count(std::size_t n) const override;
  std::optional<Face> face(std::size_t n, std::size_t i, std::size_t idx) const override;
  std::string describe(std::size_t n, std::size_t idx) const override;

 private:
  AlgebraPtr alg_;
};

/// One shared TensorBar per algebra, so cochains built separately can be combined.
std::shared_ptr<const TensorBar> tensor_bar(const AlgebraPtr& alg);

struct SimplicialCochain {
  ModelPtr model;
  Ring ring = Ring::integers();
  std::size_t degree = 0;
  std::vector<Scalar> values;

  static SimplicialCochain zero(ModelPtr model, Ring ring, std::size_t degree);
  bool is_zero() const;
};

/// Same values on the same model (TensorBars of one algebra count as the same model).
bool operator==(const SimplicialCochain& a, const SimplicialCochain& b);
/// Cochains on m1 can be combined with cochains on m2.
bool same_model(const ModelPtr& m1, const ModelPtr& m2);

SimplicialCochain operator+(const SimplicialCochain& a, const SimplicialCochain& b);
SimplicialCochain operator-(const SimplicialCochain& a, const SimplicialCochain& b);
SimplicialCochain scale(const Scalar& c, const SimplicialCochain& a);

/// (d*α)(σ) = Σ (-1)^i α(d_i σ).
SimplicialCochain coboundary(const SimplicialCochain& a);

/// Face of σ spanned by the given sorted vertices, obtained by deleting the others
/// from the largest down.
std::optional<Face> restrict_to_vertices(const SimplicialModel& m, std::size_t n, std::size_t idx,
                                         const std::vector<std::size_t>& vertices);

/// (α ∪ β)(σ) = α(front_p σ) β(back_q σ).
SimplicialCochain cup(const SimplicialCochain& a, const SimplicialCochain& b);

/// Overlapping-interval formula: cuts 0 <= j_0 < .. < j_i <= n, α on the even intervals,
/// β on the odd ones, each term signed by the shuffle of (α-vertices off the cuts, β-vertices).
/// For i = 1 this is the cup-one product with signs (-1)^{(p-1-j)(q-1)}. For i >= 2 the
/// coboundary identity holds only mod 2; see cup_i.
SimplicialCochain cup_i_interval(const SimplicialCochain& a, const SimplicialCochain& b, std::size_t i);

/// ∪_0 = cup, ∪_1 as above; i >= 2 only over Z/2 (UnsupportedArity otherwise), where the
/// coboundary identity can be met.
SimplicialCochain cup_i(const SimplicialCochain& a, const SimplicialCochain& b, std::size_t i);

/// Exhaustive d_i d_j = d_{j-1} d_i (i < j) plus the degeneracy identities on all stored degrees.
bool check_simplicial_identities(const SimplicialSlice& s);

/// ι(g_1..g_n) = ((g_1..g_n)^{-1}, g_1, .., g_n) from bar(G) into cyclic_bar_unit(G).
std::size_t iota_map(const SimplicialSlice& bar, const SimplicialSlice& unit, std::size_t n, std::size_t idx);
/// π(g_0, .., g_n) = (g_1, .., g_n) from cyclic_bar_unit(G) into bar(G).
std::size_t pi_map(const SimplicialSlice& unit, const SimplicialSlice& bar, std::size_t n, std::size_t idx);

}  // namespace hhc
