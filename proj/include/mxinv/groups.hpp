#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mxinv/linalg.hpp"
#include "mxinv/mpoly.hpp"

namespace mxinv {

inline constexpr uint64_t kDefaultGroupCap = 1'000'000;

enum class GroupName { U2, U2Tilde, SL2, SL2Tilde, GL2 };

/// CLI spellings: u2, u2tilde, sl2, sl2tilde, gl2.
GroupName parse_group_name(const std::string& s);
std::string group_name_str(GroupName g);

/// One group element together with its action data. Matrix-group elements
/// carry their 2x2 matrix; elements defined directly inside GL4 (the basis
/// swap used to extend the groups) carry only the 4x4 dual matrix. `dual` is
/// the matrix whose column j holds the image of x_{j+1} under the element's
/// substitution on the polynomial ring.
struct GroupElement {
  std::string label;
  std::optional<std::array<uint32_t, 4>> mat2;  // row-major (a,b,c,d)
  Mat dual;
};

/// The 4x4 matrix of M |-> g M g^t on the matrix space, with respect to the
/// basis (E11, E21, E12, E22); row i holds the coordinates of the image of
/// the i-th basis matrix. Throws for singular g.
Mat transpose_action_on_space(const GFPtr& f, const std::array<uint32_t, 4>& g);

GroupElement element_from_2x2(const GFPtr& f, const std::array<uint32_t, 4>& g,
                              std::string label = {});
/// The order-2 basis swap x2 <-> -x3 fixing x1 and x4.
GroupElement element_alpha(const GFPtr& f);
GroupElement element_identity(const GFPtr& f);
GroupElement element_from_dual(const GFPtr& f, Mat dual, std::string label = {});

/// Substitution on x1..x4 induced by the element. For a 2x2 element this is
/// the inverse-transpose of the transpose_action_on_space matrix; the golden
/// tests pin the row/column convention against the explicit shear, rotation
/// and swap formulas.
LinearSub dual_action(const GroupElement& g);

Poly act(const GroupElement& g, const Poly& f);

/// Group product in the dual representation: act(compose(g, h), f) equals
/// act(g, act(h, f)).
GroupElement compose(const GroupElement& g, const GroupElement& h);

/// Matrix of act(g, .) on the degree-d monomial basis; column j holds the
/// coefficient vector of the image of the j-th basis monomial. Builds
/// columns by sharing partial products, with the outer loop OpenMP-parallel.
Mat induced_degree_matrix(const LinearSub& sub, uint32_t d);
inline Mat induced_degree_matrix(const GroupElement& g, uint32_t d) {
  return induced_degree_matrix(dual_action(g), d);
}

/// Naive per-column construction, kept as an independent serial reference.
Mat induced_degree_matrix_ref(const LinearSub& sub, uint32_t d);

/// True iff m != I and rank(m - I) = 1.
bool is_reflection(const Mat& m);

/// A named matrix group over GF(q): generator list, the order of its image
/// in GL4, and a lazily enumerated image. Immutable once constructed.
class GroupSpec {
public:
  static GroupSpec make(GroupName name, const GFPtr& f);
  /// Ad-hoc group given by explicit dual matrices (no order formula).
  static GroupSpec synthetic(const GFPtr& f, std::vector<GroupElement> gens, std::string label);

  const GFPtr& field() const { return f_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  std::string label() const { return label_; }
  std::optional<GroupName> name() const { return name_; }
  /// Order of the image in GL4 by the group-size formula; 0 when unknown.
  uint64_t order_formula() const { return order_; }

  /// Closure of the generators under multiplication, identity first,
  /// breadth-first and deterministic. Verified against order_formula when
  /// one is known. Throws when the closure exceeds `cap`.
  const std::vector<Mat>& image(uint64_t cap = kDefaultGroupCap) const;

private:
  GroupSpec() = default;
  GFPtr f_;
  std::vector<GroupElement> gens_;
  std::string label_;
  std::optional<GroupName> name_;
  uint64_t order_ = 0;
  mutable std::optional<std::vector<Mat>> image_;
};

}  // namespace mxinv
