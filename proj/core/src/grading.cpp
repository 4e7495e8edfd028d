#include "relhfk/grading.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace relhfk {

GradingGraph build_grading_graph(const CyclicRelator& relator,
                                 const std::vector<PrimitiveBigon>& bigons,
                                 const std::vector<BasepointPair>& counts) {
  GradingGraph g;
  g.nodes = relator.x_count();
  for (size_t i = 0; i < bigons.size(); ++i) {
    const PrimitiveBigon& b = bigons[i];
    const BasepointPair& p = counts[i];
    GradingEdge e;
    e.from = b.span.start % g.nodes;
    e.to = b.span.end_label(g.nodes);
    e.dF = p.nz - p.nw;
    e.dM = (b.orientation == Orientation::Positive ? 1 : -1) - 2 * p.nw;
    e.dw = p.nw;
    e.span = b.span;
    g.edges.push_back(e);
  }
  return g;
}

GradingTable solve_relative(const GradingGraph& graph) {
  const int n = graph.nodes;
  GradingTable t;
  t.F.assign(n, 0);
  t.M.assign(n, 0);
  t.w.assign(n, 0);
  t.component.assign(n, -1);

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge index, +1 fwd / -1 back)
  for (size_t i = 0; i < graph.edges.size(); ++i) {
    adj[graph.edges[i].from].push_back({static_cast<int>(i), +1});
    adj[graph.edges[i].to].push_back({static_cast<int>(i), -1});
  }

  int comp = 0;
  for (int root = 0; root < n; ++root) {
    if (t.component[root] != -1) continue;
    t.component[root] = comp;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [ei, dir] : adj[u]) {
        const GradingEdge& e = graph.edges[ei];
        int v = dir > 0 ? e.to : e.from;
        // F(from) - F(to) = dF
        int F = dir > 0 ? t.F[u] - e.dF : t.F[u] + e.dF;
        int M = dir > 0 ? t.M[u] - e.dM : t.M[u] + e.dM;
        int w = dir > 0 ? t.w[u] - e.dw : t.w[u] + e.dw;
        if (t.component[v] == -1) {
          t.component[v] = comp;
          t.F[v] = F;
          t.M[v] = M;
          t.w[v] = w;
          queue.push_back(v);
        } else if (t.F[v] != F || t.M[v] != M || t.w[v] != w) {
          std::ostringstream os;
          os << "grading cycle through x" << e.from + 1 << " -> x" << e.to + 1
             << " is inconsistent (expected (F,M,w) shift (" << e.dF << "," << e.dM << ","
             << e.dw << "))";
          fail(errc::inconsistent, "solve_relative", os.str());
        }
      }
    }
    ++comp;
  }
  t.component_count = comp;
  return t;
}

int normalize_alexander(GradingTable& table, int component_id) {
  // Only the parity of each F-multiplicity matters: the odd-count values must
  // be carried onto a set symmetric about zero, which pins the shift.
  std::map<int, int> count;
  for (size_t i = 0; i < table.F.size(); ++i) {
    if (table.component[i] == component_id) ++count[table.F[i]];
  }
  std::vector<int> odd;
  for (auto [value, c] : count) {
    if (c % 2 != 0) odd.push_back(value);
  }
  if (odd.empty())
    fail(errc::not_pseudo_geometric, "normalize-ambiguous",
         "every Alexander shift satisfies the mod-2 symmetry on component " +
             std::to_string(component_id) + " (all multiplicities even)");
  const int lo = odd.front(), hi = odd.back();
  if ((lo + hi) % 2 != 0)
    fail(errc::not_pseudo_geometric, "normalize-none",
         "no Alexander shift satisfies the mod-2 symmetry on component " +
             std::to_string(component_id));
  const int c = -(lo + hi) / 2;
  for (size_t i = 0, j = odd.size() - 1; i < j; ++i, --j) {
    if (odd[i] + odd[j] != lo + hi)
      fail(errc::not_pseudo_geometric, "normalize-none",
           "no Alexander shift satisfies the mod-2 symmetry on component " +
               std::to_string(component_id));
  }
  for (size_t i = 0; i < table.F.size(); ++i) {
    if (table.component[i] == component_id) table.F[i] += c;
  }
  return c;
}

std::string ReducedRelator::text() const {
  std::string out;
  for (const Token& tok : tokens) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(tok.letter.symbol());
    if (tok.x_label >= 0) out += std::to_string(tok.x_label + 1);
  }
  return out;
}

namespace {

struct Candidate {
  int start_pos = 0;   // index into the alive X-token list
  int x_len = 0;       // X-tokens covered, endpoints included
  int token_len = 0;   // alive tokens covered, endpoints included
  int start_label = 0;
  int end_label = 0;
};

}  // namespace

ReductionResult reduce_relator(const CyclicRelator& relator, const GradingTable& table,
                               int wrap_bound) {
  ReductionResult result;
  ReducedRelator word;
  for (int pos = 0; pos < relator.period(); ++pos) {
    ReducedRelator::Token tok;
    tok.position = pos;
    tok.letter = relator.letters()[pos];
    tok.x_label = -1;
    word.tokens.push_back(tok);
  }
  for (int i = 0; i < relator.x_count(); ++i)
    word.tokens[relator.x_positions()[i]].x_label = i;

  result.trace.push_back(word.text());

  const int n = relator.x_count();
  for (int round = 0; round <= n; ++round) {
    std::vector<int> xs;  // indices into word.tokens of alive X-tokens
    for (size_t i = 0; i < word.tokens.size(); ++i) {
      if (word.tokens[i].x_label >= 0) xs.push_back(static_cast<int>(i));
    }
    const int m = static_cast<int>(xs.size());
    if (m <= 1) break;

    std::optional<Candidate> best;
    // deletions preserve the signed X-count, so first returns stay within
    // one period of the current word whenever that count is positive
    const bool one_period = relator.signed_x_count() >= 1;
    for (int s = 0; s < m; ++s) {
      int psi = word.tokens[xs[s]].letter.sign;
      for (int j = s + 1; j / m <= wrap_bound && (!one_period || j <= s + m); ++j) {
        psi += word.tokens[xs[j % m]].letter.sign;
        if (psi != 0) continue;
        // first return: a primitive disk word of the current cyclic word
        const int a = word.tokens[xs[s]].x_label;
        const int b = word.tokens[xs[j % m]].x_label;
        if (table.component[a] == table.component[b] && table.w[a] == table.w[b]) {
          Candidate cand;
          cand.start_pos = s;
          cand.x_len = j - s + 1;
          cand.start_label = a;
          cand.end_label = b;
          // token span length, endpoints included
          int from = xs[s], to = xs[j % m];
          int len = to - from + 1;
          if (len <= 0 || cand.x_len > m) len += static_cast<int>(word.tokens.size());
          cand.token_len = len;
          if (!best || cand.token_len < best->token_len ||
              (cand.token_len == best->token_len && cand.start_label < best->start_label))
            best = cand;
        }
        break;
      }
    }
    if (!best) break;

    // delete the contiguous cyclic range of tokens, endpoints included
    const int from = xs[best->start_pos];
    const int to = xs[(best->start_pos + best->x_len - 1) % m];
    std::vector<ReducedRelator::Token> kept;
    for (size_t i = 0; i < word.tokens.size(); ++i) {
      const int pos = static_cast<int>(i);
      bool inside = from <= to ? (pos >= from && pos <= to) : (pos >= from || pos <= to);
      if (!inside) kept.push_back(word.tokens[i]);
    }
    word.tokens = std::move(kept);
    result.deletions.push_back({best->start_label, best->end_label});
    result.trace.push_back(word.text());
  }

  for (const auto& tok : word.tokens) {
    if (tok.x_label >= 0) result.survivors.push_back(tok.x_label);
  }
  std::sort(result.survivors.begin(), result.survivors.end());
  result.word = std::move(word);
  return result;
}

void absolute_maslov(GradingTable& table, const std::vector<int>& survivors) {
  for (int survivor : survivors) {
    const int comp = table.component[survivor];
    const int shift = -table.M[survivor];
    for (size_t i = 0; i < table.M.size(); ++i) {
      if (table.component[i] == comp) table.M[i] += shift;
    }
  }
}

}  // namespace relhfk
