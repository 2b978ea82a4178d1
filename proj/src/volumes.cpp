#include "prym/volumes.hpp"

#include <deque>
#include <map>
#include <set>

#include "prym/error.hpp"

namespace prym {

MultiPoly jacobian_polynomial(const MetricGraph& g, const LengthSymbols& symbols) {
  if (symbols.size() != g.num_edges()) throw InapplicableError("symbol count does not match edge count");
  MultiPoly out;
  for_each_spanning_tree_complement(g, [&](const EdgeSet& f) {
    Rational coef(1);
    std::vector<Monomial::Factor> factors;
    for (auto e : f) {
      coef *= symbols[e].scale;
      factors.emplace_back(symbols[e].variable, 1);
    }
    out.add_term(coef, Monomial::from_factors(std::move(factors)));
  });
  return out;
}

MultiPoly jacobian_polynomial(const MetricGraph& g) { return jacobian_polynomial(g, edge_symbols(g)); }

namespace {

MultiPoly deletion_contraction(const MetricGraph& g) {
  if (g.num_edges() == 0) return MultiPoly(1);
  const EdgeSet first({0});
  const MultiPoly x = MultiPoly::variable(g.edge(0).id);
  if (g.edge(0).is_loop()) return x * deletion_contraction(delete_edges(g, first));
  const MultiPoly contracted = deletion_contraction(contract_edges(g, first).graph);
  if (is_bridge(g, 0)) return contracted;
  return contracted + x * deletion_contraction(delete_edges(g, first));
}

std::vector<std::size_t> undilated_edges(const DoubleCover& c) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < c.base().num_edges(); ++e)
    if (!c.is_dilated_edge(e)) out.push_back(e);
  return out;
}

/// Components of base minus the edges off `keep`; false if one of them has
/// disconnected preimage.
bool components_lift_connected(const DoubleCover& c, const std::vector<bool>& keep, Components& base_comps) {
  base_comps = connected_components(c.base(), keep);
  std::vector<bool> total_keep(c.total().num_edges());
  for (std::size_t e = 0; e < total_keep.size(); ++e) total_keep[e] = keep[c.edge_image(e)];
  const Components total_comps = connected_components(c.total(), total_keep);
  std::vector<std::size_t> seen(base_comps.count, Components::npos);
  for (std::size_t v = 0; v < c.total().num_vertices(); ++v) {
    const auto b = base_comps.of_vertex[c.vertex_image(v)];
    const auto t = total_comps.of_vertex[v];
    if (seen[b] == Components::npos)
      seen[b] = t;
    else if (seen[b] != t)
      return false;
  }
  return true;
}

std::vector<bool> complement_mask(std::size_t n, const std::vector<std::size_t>& removed) {
  std::vector<bool> keep(n, true);
  for (auto e : removed) keep[e] = false;
  return keep;
}

/// Calls visit(F) for every k-subset of `pool` in lexicographic order.
template <class Visit>
void for_each_subset(const std::vector<std::size_t>& pool, std::size_t k, Visit&& visit) {
  if (k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::size_t> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    visit(chosen);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// For a dilation-free genus one component: lift a spanning tree starting
/// from one sheet and test whether the remaining edge closes up on the
/// other sheet.
bool odd_monodromy(const DoubleCover& c, const Components& comps, std::size_t comp, const std::vector<bool>& keep,
                   const std::vector<std::vector<HalfEdge>>& half_edge_lifts) {
  const MetricGraph& base = c.base();
  const MetricGraph& total = c.total();
  constexpr auto none = Components::npos;
  std::vector<std::size_t> lift(base.num_vertices(), none);
  std::size_t start = none;
  for (std::size_t v = 0; v < base.num_vertices() && start == none; ++v)
    if (comps.of_vertex[v] == comp) start = v;
  lift[start] = c.vertex_preimages(start).front();

  auto lift_at = [&](HalfEdge h, std::size_t total_vertex) {
    for (auto th : half_edge_lifts[h])
      if (total.root(th) == total_vertex) return th;
    throw ConsistencyError("half-edge '" + base.half_edge_id(h) + "' has no lift at '" +
                           total.vertex_id(total_vertex) + "'");
  };

  const auto at = base.half_edges_by_vertex();
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto h : at[u]) {
      if (!keep[edge_of(h)]) continue;
      const auto w = base.root(paired(h));
      if (lift[w] != none) continue;
      lift[w] = total.root(paired(lift_at(h, lift[u])));
      queue.push_back(w);
    }
  }
  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    if (!keep[e] || comps.of_edge[e] != comp) continue;
    const HalfEdge h = half_edge_of(e, End::Source);
    const auto end = total.root(paired(lift_at(h, lift[base.edge(e).src])));
    if (end != lift[base.edge(e).dst]) return true;
  }
  return false;
}

}  // namespace

MultiPoly jacobian_polynomial_dc(const MetricGraph& g) {
  if (!is_connected(g)) throw ValidationError("graph not connected");
  return deletion_contraction(g);
}

void require_prym_ready(const DoubleCover& c) { require_valid(c); }

long ogod_rank(const MetricGraph& base, const EdgeSet& f) {
  std::vector<bool> keep(base.num_edges(), true);
  for (auto e : f) keep[e] = false;
  return static_cast<long>(connected_components(base, keep).count);
}

std::vector<Ogod> enumerate_ogods(const DoubleCover& c) {
  require_prym_ready(c);
  const auto h = static_cast<std::size_t>(dilation_stats(c).h);
  const auto pool = undilated_edges(c);
  std::vector<Ogod> out;
  if (h > pool.size()) return out;
  std::vector<std::size_t> chosen;
  Components comps;
  // A component with disconnected preimage is a trivially covered,
  // dilation-free subgraph; every piece of it stays trivially covered, so
  // the whole branch can be dropped.
  auto search = [&](auto&& self, std::size_t next) -> void {
    if (!components_lift_connected(c, complement_mask(c.base().num_edges(), chosen), comps)) return;
    if (chosen.size() == h) {
      out.push_back({EdgeSet(chosen), static_cast<long>(comps.count)});
      return;
    }
    for (std::size_t i = next; i + (h - chosen.size()) <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return out;
}

std::vector<Ogod> enumerate_ogods_classified(const DoubleCover& c) {
  require_prym_ready(c);
  const MetricGraph& base = c.base();
  const auto h = static_cast<std::size_t>(dilation_stats(c).h);
  const auto pool = undilated_edges(c);
  const Components dil = dilation_components(c);

  std::vector<long> dil_genus(dil.count, 1);
  for (std::size_t e = 0; e < base.num_edges(); ++e)
    if (dil.of_edge[e] != Components::npos) ++dil_genus[dil.of_edge[e]];
  for (std::size_t v = 0; v < base.num_vertices(); ++v)
    if (dil.of_vertex[v] != Components::npos) --dil_genus[dil.of_vertex[v]];

  std::vector<std::vector<HalfEdge>> half_edge_lifts(base.num_half_edges());
  for (HalfEdge th = 0; th < c.total().num_half_edges(); ++th) half_edge_lifts[c.half_edge_image(th)].push_back(th);

  std::vector<Ogod> out;
  for_each_subset(pool, h, [&](const std::vector<std::size_t>& f) {
    const auto keep = complement_mask(base.num_edges(), f);
    const Components comps = connected_components(base, keep);
    std::vector<long> genus_of(comps.count, 1);
    std::vector<std::set<std::size_t>> dil_in(comps.count);
    for (std::size_t e = 0; e < base.num_edges(); ++e)
      if (keep[e]) ++genus_of[comps.of_edge[e]];
    for (std::size_t v = 0; v < base.num_vertices(); ++v) {
      --genus_of[comps.of_vertex[v]];
      if (dil.of_vertex[v] != Components::npos) dil_in[comps.of_vertex[v]].insert(dil.of_vertex[v]);
    }
    for (std::size_t i = 0; i < comps.count; ++i) {
      if (dil_in[i].size() == 1) {
        if (genus_of[i] != dil_genus[*dil_in[i].begin()]) return;
      } else if (dil_in[i].empty()) {
        if (genus_of[i] != 1 || !odd_monodromy(c, comps, i, keep, half_edge_lifts)) return;
      } else {
        return;
      }
    }
    out.push_back({EdgeSet(f), static_cast<long>(comps.count)});
  });
  return out;
}

MultiPoly prym_polynomial(const DoubleCover& c) {
  MultiPoly out;
  for (const auto& ogod : enumerate_ogods(c)) {
    std::vector<Monomial::Factor> factors;
    for (auto e : ogod.edges) factors.emplace_back(c.base().edge(e).id, 1);
    Rational coef(1);
    for (long i = 1; i < ogod.rank; ++i) coef *= 4;
    out.add_term(coef, Monomial::from_factors(std::move(factors)));
  }
  return out;
}

MultiPoly prym_volume_combinatorial(const DoubleCover& c) {
  MultiPoly pr = prym_polynomial(c);
  const auto stats = dilation_stats(c);
  if (!stats.is_free()) pr *= pow2(1 - stats.d);
  return pr;
}

MultiPoly prym_volume_homology(const DoubleCover& c) {
  require_prym_ready(c);
  const auto stats = dilation_stats(c);
  const MultiPoly total = gram_det(total_symbols(c), cycle_basis(c.total()).cycles);
  const MultiPoly base = gram_det(edge_symbols(c.base()), cycle_basis(c.base()).cycles);
  MultiPoly ratio = exact_div(total, base);
  ratio *= stats.is_free() ? Rational(1, 2) : pow2(stats.m_d - stats.n_d + stats.d);
  return ratio;
}

MultiPoly prym_volume_kernel(const DoubleCover& c) {
  require_prym_ready(c);
  const auto stats = dilation_stats(c);
  if (stats.is_free()) throw InapplicableError("kernel route defined for dilated covers only; use homology route");
  const CycleBasis total_basis = cycle_basis(c.total());
  const CycleBasis base_basis = cycle_basis(c.base());
  const IntMatrix push =
      matrix_of([&](const Chain& ch) { return pushforward(c, ch); }, total_basis, base_basis);
  const IntMatrix kernel = kernel_basis(push);
  if (static_cast<long>(kernel.cols()) != stats.h)
    throw ConsistencyError("rank of Ker pi_* is " + std::to_string(kernel.cols()) + ", expected " +
                           std::to_string(stats.h));
  MultiPoly gram = gram_det(total_symbols(c), chains_from_coordinates(total_basis, kernel));
  gram *= pow2(-*stats.A);
  return gram;
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Combinatorial:
      return "combinatorial";
    case Method::Homology:
      return "homology";
    case Method::Kernel:
      return "kernel";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (auto m : {Method::Combinatorial, Method::Homology, Method::Kernel})
    if (name == to_string(m)) return m;
  throw ParseError("unknown method '" + name + "'");
}

VolumeReport prym_volume(const DoubleCover& c, Method method) {
  VolumeReport report;
  report.method = method;
  switch (method) {
    case Method::Combinatorial:
      report.value = prym_volume_combinatorial(c);
      break;
    case Method::Homology:
      report.value = prym_volume_homology(c);
      break;
    case Method::Kernel:
      report.value = prym_volume_kernel(c);
      break;
  }
  report.stats = dilation_stats(c);
  return report;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skipped";
    case Status::Info:
      return "info";
  }
  return "?";
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

void Report::add(std::string identity, std::string name, Status status, std::string detail) {
  checks.push_back({std::move(identity), std::move(name), status, std::move(detail)});
}

void Report::expect(std::string identity, std::string name, bool holds, std::string detail) {
  add(std::move(identity), std::move(name), holds ? Status::Pass : Status::Fail, std::move(detail));
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

namespace {

MultiPoly total_jacobian(const DoubleCover& c) { return jacobian_polynomial(c.total(), total_symbols(c)); }

MultiPoly total_jacobian_or_zero(const DoubleCover& c) {
  return is_connected(c.total()) ? total_jacobian(c) : MultiPoly();
}

std::string equation(const MultiPoly& lhs, const MultiPoly& rhs) {
  return lhs.to_string() + (lhs == rhs ? " == " : " != ") + rhs.to_string();
}

std::string stats_string(const DilationStats& s) {
  return "m_d=" + std::to_string(s.m_d) + " n_d=" + std::to_string(s.n_d) + " d=" + std::to_string(s.d) +
         " g_base=" + std::to_string(s.g_base) + " g_total=" + std::to_string(s.g_total);
}

std::string fresh_edge_id(const MetricGraph& g, std::string id) {
  while (g.find_edge(id)) id += "_";
  return id;
}

bool is_dilation_bridge(const DoubleCover& c, std::size_t e) {
  const MetricGraph& base = c.base();
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < base.num_vertices(); ++v)
    if (c.is_dilated_vertex(v)) vertices.push_back(base.vertex_id(v));
  std::vector<EdgeSpec> edges;
  for (std::size_t f = 0; f < base.num_edges(); ++f)
    if (c.is_dilated_edge(f))
      edges.push_back({base.edge(f).id, base.vertex_id(base.edge(f).src), base.vertex_id(base.edge(f).dst),
                       base.edge(f).length});
  const MetricGraph dil(std::move(vertices), std::move(edges));
  return is_bridge(dil, dil.edge_index(base.edge(e).id));
}

void resolve_moves(const DoubleCover& c, Report& report) {
  const MetricGraph& base = c.base();
  const auto stats = dilation_stats(c);
  const MultiPoly jb = jacobian_polynomial(base);
  const MultiPoly jt = total_jacobian(c);
  const MultiPoly pr = prym_polynomial(c);
  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    if (!c.is_dilated_vertex(v)) continue;
    bool isolated = true;
    for (std::size_t e = 0; e < base.num_edges(); ++e)
      if (c.is_dilated_edge(e) && (base.edge(e).src == v || base.edge(e).dst == v)) isolated = false;
    if (!isolated) continue;

    const std::string& vid = base.vertex_id(v);
    const std::string loop = fresh_edge_id(base, "r_" + vid);
    const std::string tag = "resolve " + vid;
    const DoubleCover resolved = resolve_dilated_vertex(c, vid, Rational(1), default_split(c, vid), loop);
    const auto rs = dilation_stats(resolved);
    const MultiPoly x = MultiPoly::variable(loop);

    report.expect("moves", tag + ": dilation counts",
                  rs.n_d == stats.n_d - 1 && rs.d == stats.d - 1 && rs.m_d == stats.m_d &&
                      rs.g_base == stats.g_base + 1 && rs.g_total == stats.g_total + 1,
                  stats_string(rs));
    const MultiPoly jb2 = jacobian_polynomial(resolved.base());
    report.expect("moves", tag + ": J(base') = x J(base)", jb2 == x * jb, equation(jb2, x * jb));

    const DoubleCover without_loop = delete_cover_edges(resolved, EdgeSet::from_ids(resolved.base(), {loop}));
    const MultiPoly jt2 = total_jacobian(resolved);
    const MultiPoly expected = MultiPoly(2) * x * jt + x * x * total_jacobian_or_zero(without_loop);
    report.expect("moves", tag + ": J(total') = 2x J(total) + x^2 J(total'_0)", jt2 == expected,
                  equation(jt2, expected));

    const MultiPoly pr2 = prym_polynomial(resolved);
    const MultiPoly diff = pr2 - pr;
    report.expect("moves", tag + ": x divides Pr' - Pr", diff.substitute({{loop, Rational(0)}}).is_zero(),
                  "Pr' - Pr = " + diff.to_string());
    report.expect("moves", tag + ": Thm A on resolved cover", verify_thm_a(resolved).ok());

    const auto back = dilation_stats(contract_cover(resolved, EdgeSet::from_ids(resolved.base(), {loop})));
    report.expect("moves", tag + ": contracting the loop restores the counts",
                  back.m_d == stats.m_d && back.n_d == stats.n_d && back.d == stats.d &&
                      back.g_base == stats.g_base && back.g_total == stats.g_total,
                  stats_string(back));
  }
}

void dilated_edge_moves(const DoubleCover& c, Report& report) {
  const MetricGraph& base = c.base();
  const auto stats = dilation_stats(c);
  const MultiPoly jb = jacobian_polynomial(base);
  const MultiPoly jt = total_jacobian(c);
  const MultiPoly pr = prym_polynomial(c);
  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    if (!c.is_dilated_edge(e)) continue;
    const std::string& eid = base.edge(e).id;
    const std::string tag = "dilated edge " + eid;
    const EdgeSet just_e({e});
    const MultiPoly x = MultiPoly::variable(eid);
    const MultiPoly half_x = MultiPoly(Rational(1, 2)) * x;

    const DoubleCover contracted = contract_cover(c, just_e);
    const auto cs = dilation_stats(contracted);
    report.expect("moves", tag + ": contraction drops m_d, keeps d", cs.m_d == stats.m_d - 1 && cs.d == stats.d,
                  stats_string(cs));
    const MultiPoly pr_c = prym_polynomial(contracted);
    report.expect("moves", tag + ": Pr invariant under contraction", pr_c == pr, equation(pr_c, pr));
    const MultiPoly jb_c = jacobian_polynomial(contracted.base());
    const MultiPoly jt_c = total_jacobian(contracted);

    if (base.edge(e).is_loop()) {
      report.expect("moves", tag + " (loop): n_d unchanged", cs.n_d == stats.n_d, stats_string(cs));
      report.expect("moves", tag + " (loop): J(base) = x J(base_e)", jb == x * jb_c, equation(jb, x * jb_c));
      report.expect("moves", tag + " (loop): J(total) = x/2 J(total_e)", jt == half_x * jt_c,
                    equation(jt, half_x * jt_c));
      continue;
    }
    report.expect("moves", tag + ": contraction drops n_d", cs.n_d == stats.n_d - 1, stats_string(cs));
    if (is_bridge(base, e)) {
      report.expect("moves", tag + " (bridge): J(base) = J(base_e)", jb == jb_c, equation(jb, jb_c));
      report.expect("moves", tag + " (bridge): J(total) = J(total_e)", jt == jt_c, equation(jt, jt_c));
      continue;
    }
    const DoubleCover deleted = delete_cover_edges(c, just_e);
    const auto ds = dilation_stats(deleted);
    const MultiPoly jb_d = jacobian_polynomial(deleted.base());
    const MultiPoly jt_d = total_jacobian(deleted);
    report.expect("moves", tag + ": J(base) = J(base_e) + x J(base^e)", jb == jb_c + x * jb_d,
                  equation(jb, jb_c + x * jb_d));
    report.expect("moves", tag + ": J(total) = J(total_e) + x/2 J(total^e)", jt == jt_c + half_x * jt_d,
                  equation(jt, jt_c + half_x * jt_d));
    report.expect("moves", tag + ": deletion drops m_d, keeps n_d", ds.m_d == stats.m_d - 1 && ds.n_d == stats.n_d,
                  stats_string(ds));
    const MultiPoly pr_d = prym_polynomial(deleted);
    if (is_dilation_bridge(c, e)) {
      report.expect("moves", tag + " (dilation bridge): d grows by one", ds.d == stats.d + 1, stats_string(ds));
      report.expect("moves", tag + " (dilation bridge): Pr = Pr(deleted)/4", MultiPoly(4) * pr == pr_d,
                    equation(MultiPoly(4) * pr, pr_d));
    } else {
      report.expect("moves", tag + ": d unchanged", ds.d == stats.d, stats_string(ds));
      report.expect("moves", tag + ": Pr = Pr(deleted)", pr == pr_d, equation(pr, pr_d));
    }
    report.expect("moves", tag + ": Thm A on deleted cover", verify_thm_a(deleted).ok());
  }
}

void crossing_loop_contractions(const DoubleCover& c, Report& report) {
  const MetricGraph& base = c.base();
  const MultiPoly before = prym_volume_combinatorial(c);
  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    if (!base.edge(e).is_loop() || c.is_dilated_vertex(base.edge(e).src)) continue;
    const auto lift = c.edge_preimages(e).front();
    if (c.total().edge(lift).is_loop()) continue;
    const std::string& eid = base.edge(e).id;
    const DoubleCover contracted = contract_cover(c, EdgeSet({e}));
    const MultiPoly limit = before.substitute({{eid, Rational(0)}});
    const MultiPoly after = prym_volume_combinatorial(contracted);
    report.add("moves", "contract loop " + eid + ": volume limit vs contracted cover", Status::Info,
               "limit " + limit.to_string() + (limit == after ? " == " : " != ") + "contracted " + after.to_string());
  }
}

}  // namespace

Report verify_thm_a(const DoubleCover& c) {
  require_prym_ready(c);
  const auto stats = dilation_stats(c);
  const MultiPoly lhs = total_jacobian(c);
  const Rational factor = stats.is_free() ? Rational(2) : pow2(1 - stats.m_d + stats.n_d - 2 * stats.d);
  const MultiPoly rhs = MultiPoly(factor) * prym_polynomial(c) * jacobian_polynomial(c.base());
  Report report;
  report.expect("thm-a", "J(total) = " + to_string(factor) + " Pr J(base)", lhs == rhs, equation(lhs, rhs));
  return report;
}

Report verify_deformation_moves(const DoubleCover& c) {
  require_prym_ready(c);
  const auto stats = dilation_stats(c);
  Report report;
  if (stats.n_d == 0) report.add("moves", "resolve dilated vertex", Status::Skip, "no dilated vertex");
  if (stats.m_d == 0) report.add("moves", "dilated edge moves", Status::Skip, "no dilated edge");
  resolve_moves(c, report);
  dilated_edge_moves(c, report);
  crossing_loop_contractions(c, report);
  return report;
}

Report verify_homology_identities(const DoubleCover& c) {
  require_prym_ready(c);
  const auto stats = dilation_stats(c);
  const HomologyMaps maps = homology_maps(c);
  const auto g = maps.base_basis.size();
  const auto gt = maps.total_basis.size();
  const IntMatrix id = IntMatrix::identity(g);
  const IntMatrix id_t = IntMatrix::identity(gt);
  Report r;
  const std::string tag = "pushpull";
  r.expect(tag, "pi_* pi^* = 2 Id", maps.push * maps.pull == Integer(2) * id);
  r.expect(tag, "pi^* pi_* = Id + iota_*", maps.pull * maps.push == id_t + maps.inv);
  r.expect(tag, "iota_*^2 = Id", maps.inv * maps.inv == id_t);
  r.expect(tag, "pi_* iota_* = pi_*", maps.push * maps.inv == maps.push);

  const LengthSymbols ts = total_symbols(c);
  const LengthSymbols bs = edge_symbols(c.base());
  bool invariant = true;
  for (std::size_t i = 0; i < gt && invariant; ++i)
    for (std::size_t j = i; j < gt && invariant; ++j) {
      const Chain& a = maps.total_basis.cycles[i];
      const Chain& b = maps.total_basis.cycles[j];
      invariant = edge_length_pairing(ts, involution_push(c, a), involution_push(c, b)) ==
                  edge_length_pairing(ts, a, b);
    }
  r.expect(tag, "(iota_* a, iota_* b) = (a, b)", invariant);

  bool isometric = true;
  for (std::size_t i = 0; i < g && isometric; ++i)
    for (std::size_t j = i; j < g && isometric; ++j) {
      const Chain& a = maps.base_basis.cycles[i];
      const Chain& b = maps.base_basis.cycles[j];
      isometric = edge_length_pairing(ts, pullback(c, a), pullback(c, b)) ==
                  MultiPoly(2) * edge_length_pairing(bs, a, b);
    }
  r.expect(tag, "(pi^* a, pi^* b) = 2 (a, b)", isometric);

  const IntMatrix kernel = kernel_basis(maps.push);
  r.expect(tag, "rank Ker pi_* = h", static_cast<long>(kernel.cols()) == stats.h,
           std::to_string(kernel.cols()) + " vs " + std::to_string(stats.h));
  r.expect(tag, "Ker pi_* basis lies in the kernel", (maps.push * kernel).is_zero());

  if (stats.is_free()) {
    r.add(tag, "eigenspace ranks", Status::Skip, "free cover");
    r.add(tag, "polarization type", Status::Skip, "free cover");
    return r;
  }
  const long A = *stats.A, B = *stats.B, C = *stats.C;
  const auto fixed = static_cast<long>(gt - rank(maps.inv - id_t));
  const auto anti = static_cast<long>(gt - rank(maps.inv + id_t));
  r.expect(tag, "rank ker(iota_* - Id) = A + C", fixed == A + C,
           std::to_string(fixed) + " vs " + std::to_string(A + C));
  r.expect(tag, "rank ker(iota_* + Id) = A + B", anti == A + B,
           std::to_string(anti) + " vs " + std::to_string(A + B));

  const auto factors = snf(induced_polarization(maps)).invariant_factors();
  std::vector<Integer> expected(static_cast<std::size_t>(B), Integer(1));
  expected.insert(expected.end(), static_cast<std::size_t>(A), Integer(2));
  std::string found;
  for (const auto& f : factors) found += (found.empty() ? "" : ",") + f.get_str();
  r.expect(tag, "polarization type (1^B, 2^A)", factors == expected, "(" + found + ")");
  return r;
}

}  // namespace prym
