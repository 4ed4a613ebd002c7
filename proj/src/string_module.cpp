#include "brickwords/string_module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace brickwords {

namespace {

int step_source(const GentleAlgebra& A, Step s) {
  const Arrow& a = A.quiver().arrow(s.arrow);
  return s.inverse ? a.target : a.source;
}

StringModule make_module(const GentleAlgebra& A, const std::vector<int>& slot_vertex,
                         const std::vector<Step>& steps, bool cyclic) {
  StringModule M;
  M.slot_vertex = slot_vertex;
  M.dim.assign(A.quiver().vertex_count(), 0);
  M.slot_basis_index.resize(slot_vertex.size());
  for (size_t i = 0; i < slot_vertex.size(); ++i)
    M.slot_basis_index[i] = M.dim[slot_vertex[i]]++;

  M.act.resize(A.quiver().arrow_count());
  for (int a = 0; a < A.quiver().arrow_count(); ++a) {
    const Arrow& ar = A.quiver().arrow(a);
    M.act[a].assign(M.dim[ar.target], std::vector<int>(M.dim[ar.source], 0));
  }
  size_t n_slots = slot_vertex.size();
  for (size_t i = 0; i < steps.size(); ++i) {
    size_t from = i;
    size_t to = cyclic ? (i + 1) % n_slots : i + 1;
    const Step& s = steps[i];
    if (!s.inverse) {
      M.act[s.arrow][M.slot_basis_index[to]][M.slot_basis_index[from]] = 1;
    } else {
      M.act[s.arrow][M.slot_basis_index[from]][M.slot_basis_index[to]] = 1;
    }
  }
  return M;
}

// Rank over the rationals by fraction-free (Bareiss) elimination.
long rank_bareiss(std::vector<std::vector<Int>> m) {
  if (m.empty() || m[0].empty()) return 0;
  long rows = static_cast<long>(m.size());
  long cols = static_cast<long>(m[0].size());
  Int prev = 1;
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long piv = -1;
    for (long r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (long r = rank + 1; r < rows; ++r) {
      for (long cc = c + 1; cc < cols; ++cc)
        m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<int> walk_vertices(const GentleAlgebra& A, const StringWord& w) {
  std::vector<int> out;
  for (long i = 0; i <= w.length(); ++i) out.push_back(w.vertex_at(A, i));
  return out;
}

// Content keys for matching substring occurrences.
std::string occ_key(const StringWord& host, long pos, long len) {
  std::string key;
  for (long i = pos; i < pos + len; ++i) {
    const Step& s = host.steps()[i];
    key += std::to_string(s.arrow);
    key += s.inverse ? '-' : '+';
    key += '.';
  }
  return key;
}

std::string inverse_key(const StringWord& host, long pos, long len) {
  std::string key;
  for (long i = pos + len - 1; i >= pos; --i) {
    const Step& s = host.steps()[i];
    key += std::to_string(s.arrow);
    key += s.inverse ? '+' : '-';
    key += '.';
  }
  return key;
}

struct OccEnv {
  Occurrence occ;
  bool submodule;
  bool quotient;
  bool touches_left;
  bool touches_right;
  bool interior;  // both boundary letters present
};

std::vector<OccEnv> all_envelopes(const GentleAlgebra& A, const StringWord& host) {
  std::vector<OccEnv> out;
  long n = host.length();
  for (long len = 0; len <= n; ++len) {
    for (long pos = 0; pos + len <= n; ++pos) {
      Envelope e = classify_envelope(A, host, Occurrence{pos, len, false});
      OccEnv oe;
      oe.occ = e.occ;
      oe.submodule = e.submodule;
      oe.quotient = e.quotient;
      oe.touches_left = pos == 0;
      oe.touches_right = pos + len == n;
      oe.interior = e.mu.has_value() && e.nu.has_value();
      out.push_back(oe);
    }
  }
  return out;
}

// Pairs quotient occurrences in u with content-equal (directly or inversely)
// submodule occurrences in v. Both occurrence filters are injected so that
// kiss and window searches can reuse the matching.
std::vector<GraphMap> match_pairs(const GentleAlgebra& A, const StringWord& u,
                                  const StringWord& v,
                                  const std::vector<OccEnv>& u_envs,
                                  const std::vector<OccEnv>& v_envs,
                                  bool (*quot_ok)(const OccEnv&),
                                  bool (*sub_ok)(const OccEnv&)) {
  std::vector<GraphMap> out;
  // Lazy patterns: match by vertex, as-written only (a lazy string equals
  // its own inverse, counting both orientations would double count).
  for (const OccEnv& qe : u_envs) {
    if (qe.occ.len != 0 || !qe.quotient || !quot_ok(qe)) continue;
    int uv = u.vertex_at(A, qe.occ.pos);
    for (const OccEnv& se : v_envs) {
      if (se.occ.len != 0 || !se.submodule || !sub_ok(se)) continue;
      if (v.vertex_at(A, se.occ.pos) != uv) continue;
      out.push_back(GraphMap{qe.occ, Occurrence{se.occ.pos, 0, false}});
    }
  }
  // Positive-length patterns, keyed by content.
  std::map<std::string, std::vector<Occurrence>> quotients;
  for (const OccEnv& qe : u_envs) {
    if (qe.occ.len == 0 || !qe.quotient || !quot_ok(qe)) continue;
    quotients[occ_key(u, qe.occ.pos, qe.occ.len)].push_back(qe.occ);
  }
  for (const OccEnv& se : v_envs) {
    if (se.occ.len == 0 || !se.submodule || !sub_ok(se)) continue;
    auto direct = quotients.find(occ_key(v, se.occ.pos, se.occ.len));
    if (direct != quotients.end()) {
      for (const Occurrence& q : direct->second)
        out.push_back(GraphMap{q, Occurrence{se.occ.pos, se.occ.len, false}});
    }
    auto inverted = quotients.find(inverse_key(v, se.occ.pos, se.occ.len));
    if (inverted != quotients.end()) {
      for (const Occurrence& q : inverted->second)
        out.push_back(GraphMap{q, Occurrence{se.occ.pos, se.occ.len, true}});
    }
  }
  std::sort(out.begin(), out.end(), [](const GraphMap& x, const GraphMap& y) {
    auto key = [](const GraphMap& g) {
      return std::tuple(g.quotient_in_u.len, g.quotient_in_u.pos, g.submodule_in_v.pos,
                        g.submodule_in_v.inverted);
    };
    return key(x) < key(y);
  });
  return out;
}

bool accept_all(const OccEnv&) { return true; }
bool accept_interior(const OccEnv& e) { return e.interior; }

}  // namespace

StringModule string_module(const GentleAlgebra& A, const StringWord& w) {
  return make_module(A, walk_vertices(A, w), w.steps(), false);
}

StringModule band_module(const GentleAlgebra& A, const Band& band) {
  const StringWord& w = band.word;
  if (!is_band(A, w)) throw std::invalid_argument("band_module: not a band");
  std::vector<int> slots;
  for (long i = 0; i < w.length(); ++i) slots.push_back(w.vertex_at(A, i));
  return make_module(A, slots, w.steps(), true);
}

long hom_dim_modules(const GentleAlgebra& A, const StringModule& M, const StringModule& N) {
  int nv = A.quiver().vertex_count();
  std::vector<long> offset(nv, 0);
  long unknowns = 0;
  for (int v = 0; v < nv; ++v) {
    offset[v] = unknowns;
    unknowns += static_cast<long>(N.dim[v]) * M.dim[v];
  }
  if (unknowns == 0) return 0;
  auto idx = [&](int v, int row, int col) {
    return offset[v] + static_cast<long>(row) * M.dim[v] + col;
  };
  std::vector<std::vector<Int>> rows;
  for (int a = 0; a < A.quiver().arrow_count(); ++a) {
    const Arrow& ar = A.quiver().arrow(a);
    int s = ar.source, t = ar.target;
    // f_t * M.act[a] = N.act[a] * f_s, one scalar equation per (i, j).
    for (int i = 0; i < N.dim[t]; ++i) {
      for (int j = 0; j < M.dim[s]; ++j) {
        std::vector<Int> row(unknowns, 0);
        bool nonzero = false;
        for (int l = 0; l < M.dim[t]; ++l) {
          if (M.act[a][l][j] != 0) {
            row[idx(t, i, l)] += M.act[a][l][j];
            nonzero = true;
          }
        }
        for (int k = 0; k < N.dim[s]; ++k) {
          if (N.act[a][i][k] != 0) {
            row[idx(s, k, j)] -= N.act[a][i][k];
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  return unknowns - rank_bareiss(std::move(rows));
}

long hom_dim_oracle(const GentleAlgebra& A, const StringWord& u, const StringWord& v) {
  return hom_dim_modules(A, string_module(A, u), string_module(A, v));
}

long band_module_end_dim(const GentleAlgebra& A, const Band& band) {
  StringModule M = band_module(A, band);
  return hom_dim_modules(A, M, M);
}

Envelope classify_envelope(const GentleAlgebra& A, const StringWord& host,
                           const Occurrence& occ) {
  (void)A;
  long n = host.length();
  if (occ.pos < 0 || occ.len < 0 || occ.pos + occ.len > n)
    throw std::out_of_range("classify_envelope: bad occurrence");
  Envelope e;
  e.occ = occ;
  if (occ.pos > 0) e.mu = host.steps()[occ.pos - 1];
  if (occ.pos + occ.len < n) e.nu = host.steps()[occ.pos + occ.len];
  bool mu_direct_or_absent = !e.mu || !e.mu->inverse;
  bool mu_inverse_or_absent = !e.mu || e.mu->inverse;
  bool nu_direct_or_absent = !e.nu || !e.nu->inverse;
  bool nu_inverse_or_absent = !e.nu || e.nu->inverse;
  e.submodule = mu_direct_or_absent && nu_inverse_or_absent;
  e.quotient = mu_inverse_or_absent && nu_direct_or_absent;
  return e;
}

std::vector<Envelope> envelopes(const GentleAlgebra& A, const StringWord& host,
                                const StringWord& pattern) {
  std::vector<Envelope> out;
  long n = host.length();
  if (pattern.is_lazy()) {
    for (long pos = 0; pos <= n; ++pos) {
      if (host.vertex_at(A, pos) != pattern.lazy_vertex()) continue;
      out.push_back(classify_envelope(A, host, Occurrence{pos, 0, false}));
    }
    return out;
  }
  long len = pattern.length();
  for (long pos = 0; pos + len <= n; ++pos) {
    bool match = true;
    for (long i = 0; i < len && match; ++i)
      match = host.steps()[pos + i] == pattern.steps()[i];
    if (match) out.push_back(classify_envelope(A, host, Occurrence{pos, len, false}));
  }
  return out;
}

std::vector<GraphMap> graph_maps(const GentleAlgebra& A, const StringWord& u,
                                 const StringWord& v) {
  auto u_envs = all_envelopes(A, u);
  auto v_envs = all_envelopes(A, v);
  return match_pairs(A, u, v, u_envs, v_envs, accept_all, accept_all);
}

std::vector<Kiss> kisses(const GentleAlgebra& A, const StringWord& u, const StringWord& v) {
  auto u_envs = all_envelopes(A, u);
  auto v_envs = all_envelopes(A, v);
  std::vector<GraphMap> maps =
      match_pairs(A, u, v, u_envs, v_envs, accept_interior, accept_interior);
  std::vector<Kiss> out;
  for (const GraphMap& g : maps) out.push_back(Kiss{g.quotient_in_u, g.submodule_in_v});
  return out;
}

BrickResult is_brick_finite(const GentleAlgebra& A, const StringWord& w) {
  std::vector<GraphMap> maps = graph_maps(A, w, w);
  BrickResult r;
  for (const GraphMap& g : maps) {
    bool identity = g.quotient_in_u.pos == 0 && g.quotient_in_u.len == w.length() &&
                    g.submodule_in_v.pos == 0 && !g.submodule_in_v.inverted;
    if (!identity) {
      r.witness = g;
      break;
    }
  }
  r.brick = !r.witness.has_value();
  return r;
}

bool is_inner_brick(const GentleAlgebra& A, const StringWord& w) {
  return kisses(A, w, w).empty();
}

StrongInnerResult strong_inner_brick(const GentleAlgebra& A, const StringWindow& win) {
  const StringWord& w = win.word;
  auto envs = all_envelopes(A, w);
  std::vector<OccEnv> usable;
  for (const OccEnv& e : envs) {
    if (e.touches_left && !win.left_closed) continue;
    if (e.touches_right && !win.right_closed) continue;
    usable.push_back(e);
  }
  std::vector<GraphMap> maps = match_pairs(A, w, w, usable, usable, accept_all, accept_all);
  StrongInnerResult r;
  for (const GraphMap& g : maps) {
    bool identity = g.quotient_in_u.pos == 0 && g.quotient_in_u.len == w.length() &&
                    g.submodule_in_v.pos == 0 && !g.submodule_in_v.inverted;
    if (!identity) {
      r.witness = g;
      break;
    }
  }
  r.strong_inner = !r.witness.has_value();
  return r;
}

}  // namespace brickwords
