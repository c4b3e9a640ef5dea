#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toroidal/fields.hpp"

namespace toroidal {

enum class GeneratorKind { central, alpha, x_plus, x_minus };

/// One generator K, alpha_i or x_i^{+/-} of the loop presentation.
struct GeneratorId {
  GeneratorKind kind = GeneratorKind::central;
  int index = 0;

  static GeneratorId central() { return {GeneratorKind::central, 0}; }
  static GeneratorId alpha(int i) { return {GeneratorKind::alpha, i}; }
  static GeneratorId x(int i, int sign) { return {sign > 0 ? GeneratorKind::x_plus : GeneratorKind::x_minus, i}; }

  /// "K", "alpha0", "x3+", "x1-".
  std::string name() const;
  static std::optional<GeneratorId> parse(std::string_view text);

  auto operator<=>(const GeneratorId&) const = default;
};

int generator_parity(const RankParams& p, const GeneratorId& g);
/// Throws std::out_of_range for an index outside 0..m+n+1.
void check_generator(const RankParams& p, const GeneratorId& g);

/// Convention switches. The default is the representation that satisfies every
/// relation; each flag reproduces one literal reading for regression tests.
struct RepresentationVariant {
  VertexNormalization vertex = VertexNormalization::plain;
  WeylPairing weyl = WeylPairing::shifted;
  /// x_i^- for i >= m+2 taken equal to x_i^+.
  bool printed_xminus = false;
  /// beta* = delta*_{n+1} + cbar* instead of delta*_{n+1}.
  bool beta_star_keeps_cbar_star = false;
};

/// Free-field image of a generator. K maps to the identity field.
Field rep_field(const RankParams& p, const GeneratorId& g, const RepresentationVariant& variant = {});

/// All generators except K, in catalog order: alpha_0.., x_0^+.., x_0^-...
std::vector<GeneratorId> generators(const RankParams& p);

struct GenMode {
  GeneratorId gen;
  int mode = 0;
  auto operator<=>(const GenMode&) const = default;
  std::string to_string() const;
};

struct RhsTerm {
  GaussianRational coef;
  GenMode op;
  bool operator==(const RhsTerm&) const = default;
};

/// One mode identity lhs = rhs, lhs = [op0, [op1, ... [op_{r-2}, op_{r-1}]]].
struct RelationInstance {
  int family = 0;
  int i = 0;
  int j = 0;
  int sign = 0;  ///< +1/-1 for the x^{+/-} families, 0 otherwise
  std::vector<GenMode> lhs;
  std::vector<RhsTerm> rhs;
  GaussianRational central;  ///< coefficient of K
  std::string id;

  std::vector<int> modes() const;
  std::string render() const;
  bool operator==(const RelationInstance&) const = default;
};

/// Builds the instance, combines like rhs terms and assigns the stable id.
RelationInstance make_instance(int family, int i, int j, int sign, std::vector<GenMode> lhs, std::vector<RhsTerm> rhs,
                               GaussianRational central);

/// Every instance of families 1-5 with all modes in [-window, window].
std::vector<RelationInstance> relation_catalog(const RankParams& p, int window);

struct FieldTerm {
  GaussianRational coef;
  GeneratorId gen;  ///< central stands for the scalar K
  bool operator==(const FieldTerm&) const = default;
};

/// [A1(z1), [A2(z2), ... B(w)]] = sum_j C^j(w) d_w^{(j)} delta(z - w).
/// Nonzero right-hand sides occur only for single brackets.
struct FieldRelation {
  int family = 0;
  int i = 0;
  int j = 0;
  int sign = 0;
  std::vector<GeneratorId> lhs;
  std::vector<std::vector<FieldTerm>> poles;  ///< poles[j] = C^j
};

std::vector<FieldRelation> field_relations(const RankParams& p);

/// [A(r), B(s)] = sum_j binom(r, j) C^j(r+s-j) for all modes in [-window, window];
/// a K term in C^j contributes binom(r, j) delta_{r+s-j,-1}.
/// Throws std::invalid_argument for a nested bracket with nonzero rhs.
std::vector<RelationInstance> mode_translate(const FieldRelation& fr, int window);

/// Generalized binomial coefficient binom(r, j) for integer r, j >= 0.
long binomial(long r, int j);

/// The representation with all generator fields built once.
class Representation {
 public:
  explicit Representation(RankParams p, RepresentationVariant variant = {});

  const RankParams& params() const { return p_; }
  const RepresentationVariant& variant() const { return variant_; }
  const Field& field(const GeneratorId& g) const;
  int parity(const GeneratorId& g) const { return generator_parity(p_, g); }

  /// g(mode) v; K acts as the identity.
  State apply(const GenMode& op, const State& v) const;
  State evaluate_lhs(const RelationInstance& inst, const State& v) const;
  State evaluate_rhs(const RelationInstance& inst, const State& v) const;

 private:
  RankParams p_;
  RepresentationVariant variant_;
  std::vector<Field> alpha_, xplus_, xminus_;
  Field central_;
};

/// One instance per line: "id: lhs = rhs".
std::string catalog_dump(const RankParams& p, int window);

}  // namespace toroidal
