#include "prym/verify.hpp"

#include "prym/error.hpp"
#include "prym/oracle.hpp"

namespace prym {

namespace {

std::string equation(const MultiPoly& lhs, const MultiPoly& rhs) {
  return lhs.to_string() + (lhs == rhs ? " == " : " != ") + rhs.to_string();
}

Report thm_b(const DoubleCover& c) {
  Report r;
  if (dilation_stats(c).is_free()) {
    r.add("thm-b", "homology route = kernel route", Status::Skip, "free cover");
    return r;
  }
  const MultiPoly homology = prym_volume_homology(c);
  const MultiPoly kernel = prym_volume_kernel(c);
  r.expect("thm-b", "homology route = kernel route", homology == kernel, equation(homology, kernel));
  return r;
}

Report main_formula(const DoubleCover& c) {
  Report r;
  const MultiPoly combinatorial = prym_volume_combinatorial(c);
  const MultiPoly homology = prym_volume_homology(c);
  r.expect("main", "combinatorial route = homology route", combinatorial == homology,
           equation(combinatorial, homology));
  if (dilation_stats(c).is_free()) {
    r.add("main", "combinatorial route = kernel route", Status::Skip, "free cover");
  } else {
    const MultiPoly kernel = prym_volume_kernel(c);
    r.expect("main", "combinatorial route = kernel route", combinatorial == kernel, equation(combinatorial, kernel));
  }
  return r;
}

Report deletion_contraction(const DoubleCover& c) {
  Report r;
  for (const auto* which : {"base", "total"}) {
    const MetricGraph& g = std::string(which) == "base" ? c.base() : c.total();
    const MultiPoly trees = jacobian_polynomial(g);
    const MultiPoly dc = jacobian_polynomial_dc(g);
    r.expect("cd", std::string("J(") + which + ") by trees = by deletion-contraction", trees == dc,
             equation(trees, dc));
  }
  return r;
}

Report free_volume(const DoubleCover& c) {
  Report r;
  if (!dilation_stats(c).is_free()) {
    r.add("free-volume", "J(total) = 2 Vol^2 J(base)", Status::Skip, "cover is not free");
    return r;
  }
  const MultiPoly lhs = jacobian_polynomial(c.total(), total_symbols(c));
  const MultiPoly rhs = MultiPoly(2) * prym_volume_homology(c) * jacobian_polynomial(c.base());
  r.expect("free-volume", "J(total) = 2 Vol^2 J(base)", lhs == rhs, equation(lhs, rhs));
  return r;
}

std::string ogod_list(const MetricGraph& base, const std::vector<Ogod>& ogods) {
  std::string out;
  for (const auto& o : ogods) {
    out += out.empty() ? "{" : " {";
    const auto ids = o.edges.ids(base);
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
    out += "}:" + std::to_string(o.rank);
  }
  return out.empty() ? "none" : out;
}

Report ogod_classify(const DoubleCover& c) {
  Report r;
  const auto pruned = enumerate_ogods(c);
  const auto classified = enumerate_ogods_classified(c);
  const auto brute = oracle::brute_ogods(c);
  r.expect("ogod-classify", "pruned = classified", pruned == classified,
           ogod_list(c.base(), pruned) + " / " + ogod_list(c.base(), classified));
  r.expect("ogod-classify", "pruned = brute force", pruned == brute,
           ogod_list(c.base(), pruned) + " / " + ogod_list(c.base(), brute));
  return r;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"thm-a",    "thm-b",         "main", "cd", "free-volume",
                                                 "pushpull", "ogod-classify", "moves"};
  return names;
}

Report verify_identity(const DoubleCover& c, const std::string& identity) {
  require_prym_ready(c);
  if (identity == "all") {
    Report all;
    for (const auto& name : identity_names()) all.append(verify_identity(c, name));
    return all;
  }
  if (identity == "thm-a") return verify_thm_a(c);
  if (identity == "thm-b") return thm_b(c);
  if (identity == "main") return main_formula(c);
  if (identity == "cd") return deletion_contraction(c);
  if (identity == "free-volume") return free_volume(c);
  if (identity == "pushpull") return verify_homology_identities(c);
  if (identity == "ogod-classify") return ogod_classify(c);
  if (identity == "moves") return verify_deformation_moves(c);
  throw ParseError("unknown identity '" + identity + "'");
}

}  // namespace prym
