#pragma once

#include <string>
#include <vector>

#include "prym/cover.hpp"
#include "prym/graph.hpp"
#include "prym/homology.hpp"
#include "prym/polynomial.hpp"

namespace prym {

/// An h-element set of undilated base edges whose removal leaves only
/// components with connected preimage; rank is the number of components.
struct Ogod {
  EdgeSet edges;
  long rank = 0;

  friend bool operator==(const Ogod&, const Ogod&) = default;
  friend auto operator<=>(const Ogod&, const Ogod&) = default;
};

/// Sum over spanning-tree complements of the product of edge symbols.
/// Throws ValidationError if g is disconnected.
MultiPoly jacobian_polynomial(const MetricGraph& g, const LengthSymbols& symbols);
MultiPoly jacobian_polynomial(const MetricGraph& g);

/// Same polynomial by deletion-contraction on the first edge, with the
/// edge ids as variables.
MultiPoly jacobian_polynomial_dc(const MetricGraph& g);

/// Pruned subset search with the direct preimage-connectivity test.
std::vector<Ogod> enumerate_ogods(const DoubleCover& c);

/// Subset search that classifies each component instead: it must hold
/// exactly one dilation component of equal genus, or be dilation-free of
/// genus one with odd monodromy.
std::vector<Ogod> enumerate_ogods_classified(const DoubleCover& c);

/// Rank of F as the number of components of base minus F.
long ogod_rank(const MetricGraph& base, const EdgeSet& f);

/// Sum over ogods of 4^(rank-1) times the product of the edge variables.
MultiPoly prym_polynomial(const DoubleCover& c);

/// 2^(1-d) Pr for dilated covers, Pr for free ones.
MultiPoly prym_volume_combinatorial(const DoubleCover& c);
/// Prefactor times Gram(total) / Gram(base): 2^(m_d-n_d+d) for dilated
/// covers, 1/2 for free covers.
MultiPoly prym_volume_homology(const DoubleCover& c);
/// 2^(-A) times the Gram determinant of a Z-basis of Ker pi_*. Dilated
/// covers only; throws InapplicableError otherwise.
MultiPoly prym_volume_kernel(const DoubleCover& c);

enum class Method { Combinatorial, Homology, Kernel };

const char* to_string(Method m);
/// Throws ParseError for unknown names.
Method parse_method(const std::string& name);

struct VolumeReport {
  Method method = Method::Combinatorial;
  MultiPoly value;
  DilationStats stats;
};

VolumeReport prym_volume(const DoubleCover& c, Method method);

enum class Status { Pass, Fail, Skip, Info };

const char* to_string(Status s);

struct Check {
  std::string identity;
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  /// No check failed.
  bool ok() const;
  void add(std::string identity, std::string name, Status status, std::string detail = {});
  void expect(std::string identity, std::string name, bool holds, std::string detail = {});
  void append(const Report& other);
};

/// J(total) = 2^(1-m_d+n_d-2d) Pr J(base), or 2 Pr J(base) for free covers,
/// with J(total) written in base variables.
Report verify_thm_a(const DoubleCover& c);

/// Loop resolution at each resolvable dilated vertex and contraction /
/// deletion of each dilated edge, checking the Jacobian and Prym
/// polynomial relations and the dilation counts. Also records the volume
/// jump when an undilated loop with crossing lifts is contracted.
Report verify_deformation_moves(const DoubleCover& c);

/// pi_* pi^* = 2, pi^* pi_* = 1 + iota_*, iota_*^2 = 1, pairing
/// compatibilities, rank Ker pi_* = h, the eigenspace ranks and the
/// polarization type of dilated covers.
Report verify_homology_identities(const DoubleCover& c);

/// Validates and additionally requires a connected total graph.
void require_prym_ready(const DoubleCover& c);

}  // namespace prym
