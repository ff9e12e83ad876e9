#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bdforge {

/// Root in simple-root coordinates.
using Root = std::vector<int>;

/// Largest rank accepted by build_root_system. Everything up to rank 4 is
/// covered by the test suite.
inline constexpr int kMaxRank = 8;

/// Reduced irreducible root system of type A, B, C, D or G2, stored in
/// simple-root coordinates.
///
/// The inner product is normalized so that short roots have squared length 2.
/// Positive roots are ordered by height, then by coefficient vector in
/// descending lexicographic order; roots() lists the positive roots followed
/// by their negatives in the same order.
class RootSystem {
public:
  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  /// Integer Gram matrix (alpha_i, alpha_j).
  const std::vector<std::vector<long>>& gram() const { return gram_; }
  /// cartan()[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  std::vector<Root> roots() const;
  int num_positive() const { return static_cast<int>(positive_.size()); }

  /// Index into positive_roots(), or -1.
  int positive_index(const Root& r) const;
  bool is_root(const Root& r) const;
  bool is_positive_root(const Root& r) const { return positive_index(r) >= 0; }

  long inner(const Root& a, const Root& b) const;
  long norm2(const Root& a) const { return inner(a, a); }
  /// <beta, alpha_i^vee> = 2 (beta, alpha_i) / (alpha_i, alpha_i).
  int pairing(const Root& beta, int i) const;

  Root simple_root(int i) const;

  friend RootSystem build_root_system(char type, int rank);

private:
  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<long>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::map<Root, int> positive_lookup_;
};

/// Throws UnsupportedType for an unknown letter or a rank outside the valid
/// range of the type (A >= 1, B >= 2, C >= 2, D >= 4, G = 2, all <= kMaxRank).
RootSystem build_root_system(char type, int rank);

int height(const Root& r);
Root negate(const Root& r);
Root add(const Root& a, const Root& b);
Root subtract(const Root& a, const Root& b);

/// Permutation of simple-root indices (0-based).
class DiagramAutomorphism {
public:
  DiagramAutomorphism() = default;
  explicit DiagramAutomorphism(std::vector<int> perm);
  static DiagramAutomorphism identity(int rank);

  int operator()(int i) const { return perm_[i]; }
  const std::vector<int>& perm() const { return perm_; }
  int size() const { return static_cast<int>(perm_.size()); }

  Root apply(const Root& r) const;
  /// (*this) o other.
  DiagramAutomorphism compose(const DiagramAutomorphism& other) const;
  DiagramAutomorphism inverse() const;
  bool is_identity() const;
  int order() const;

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
  friend auto operator<=>(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;

private:
  std::vector<int> perm_;
};

bool preserves_cartan(const RootSystem& rs, const DiagramAutomorphism& pi);

/// All Cartan-preserving permutations, identity first, then lexicographic.
std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs);

/// (Gamma1, Gamma2, tau) with 0-based simple-root indices. gamma1 and gamma2
/// are kept sorted; tau maps each element of gamma1 into gamma2.
struct AdmissibleTriple {
  std::vector<int> gamma1;
  std::vector<int> gamma2;
  std::map<int, int> tau;

  static AdmissibleTriple trivial() { return {}; }
  bool is_trivial() const { return gamma1.empty(); }

  friend bool operator==(const AdmissibleTriple&, const AdmissibleTriple&) = default;
  friend auto operator<=>(const AdmissibleTriple&, const AdmissibleTriple&) = default;
};

/// Checks the shape of a triple against rs: indices in range, sorted
/// duplicate-free subsets, tau a bijection gamma1 -> gamma2. Throws
/// InvalidArgument otherwise.
void validate_triple_shape(const RootSystem& rs, const AdmissibleTriple& t);

bool tau_is_isometry(const RootSystem& rs, const AdmissibleTriple& t);

/// Smallest k >= 1 with tau^k(alpha) outside gamma1, or nullopt when the
/// iterates cycle inside gamma1.
std::optional<int> nilpotency_witness(const AdmissibleTriple& t, int alpha);

/// Shape, isometry and nilpotency.
bool is_admissible(const RootSystem& rs, const AdmissibleTriple& t);

/// Every admissible triple, in canonical order (lexicographic on gamma1,
/// gamma2, then the graph of tau). The trivial triple comes first.
std::vector<AdmissibleTriple> enumerate_admissible_triples(const RootSystem& rs);

/// tau^k(alpha) for a positive root alpha in the integer span of gamma1,
/// extended additively. Returns nullopt as soon as an intermediate iterate
/// leaves that span. Throws InvalidArgument when alpha is not a positive root
/// supported on gamma1 or k < 1.
std::optional<Root> extend_tau(const RootSystem& rs, const AdmissibleTriple& t, const Root& alpha, int k);

/// True when every nonzero coefficient of r sits on an index of `subset`.
bool supported_on(const Root& r, const std::vector<int>& subset);

}  // namespace bdforge
