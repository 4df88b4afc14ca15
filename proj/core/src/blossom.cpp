// Weighted matching by Edmonds' primal-dual blossom algorithm.
//
// The engine follows the classic O(n^3) formulation with vertex duals,
// blossom duals, S/T labels and the four dual-update cases. It is
// generalised so that exposed vertices may carry different duals: a vertex
// is a tree root only while it is exposed with a positive dual, and when an
// S-vertex dual drops to zero the alternating path from its root is flipped
// so that the zero-dual vertex becomes the exposed one. This is what allows
// starting from a fractional optimum instead of the empty matching.
//
// Internally every weight is doubled and duals are kept in units where
// slack(i, j) = dual[i] + dual[j] - 2 * weight, so all quantities stay
// integral.

#include "kdjm/blossom.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>
#include <stdexcept>

#include "kdjm/deadline.hpp"

namespace kdjm {

namespace detail {

FractionalMatching max_weight_fractional_matching(std::size_t n,
                                                  std::span<const WeightedPair> edges) {
  // Maximum-weight perfect assignment on the double cover: left copy u is
  // joined to right copy v' for every edge {u, v} (both orientations) and
  // to its own copy u' with weight 0 ("u stays exposed").
  std::vector<std::size_t> off(n + 1, 0);
  for (const auto& e : edges) {
    ++off[e.i + 1];
    ++off[e.j + 1];
  }
  for (std::size_t v = 0; v < n; ++v) off[v + 1] += off[v] + 1;
  struct Arc {
    std::uint32_t to;
    std::int64_t w;
  };
  std::vector<Arc> arcs(off[n]);
  {
    std::vector<std::size_t> fill(off.begin(), off.end() - 1);
    for (std::size_t v = 0; v < n; ++v) arcs[fill[v]++] = {static_cast<std::uint32_t>(v), 0};
    for (const auto& e : edges) {
      arcs[fill[e.i]++] = {e.j, e.w};
      arcs[fill[e.j]++] = {e.i, e.w};
    }
  }

  // Dual feasibility: a[u] + b[v] >= w(u, v'), equality on assigned pairs.
  std::vector<std::int64_t> a(n, 0), b(n, 0);
  std::vector<std::int64_t> match_left(n, -1), match_right(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    std::int64_t best = 0;
    for (std::size_t p = off[u]; p < off[u + 1]; ++p) best = std::max(best, arcs[p].w);
    a[u] = best;
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t p = off[u]; p < off[u + 1]; ++p) {
      const Arc& arc = arcs[p];
      if (a[u] + b[arc.to] == arc.w && match_right[arc.to] == -1) {
        match_left[u] = arc.to;
        match_right[arc.to] = static_cast<std::int64_t>(u);
        break;
      }
    }
  }

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist_left(n, kInf), dist_right(n, kInf);
  std::vector<std::int64_t> pred_right(n, -1);
  std::vector<std::uint8_t> done_left(n, 0), done_right(n, 0);
  std::vector<std::uint32_t> touched_left, touched_right;
  using Item = std::pair<std::int64_t, std::uint32_t>;  // (dist, node); right nodes offset by n
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

  for (std::size_t s = 0; s < n; ++s) {
    if (match_left[s] != -1) continue;
    poll_deadline();
    heap = {};
    dist_left[s] = 0;
    touched_left.push_back(static_cast<std::uint32_t>(s));
    heap.push({0, static_cast<std::uint32_t>(s)});
    std::int64_t found = -1;
    std::int64_t total = 0;
    while (!heap.empty()) {
      const auto [d, node] = heap.top();
      heap.pop();
      if (node < n) {
        const std::size_t u = node;
        if (done_left[u] || d != dist_left[u]) continue;
        done_left[u] = 1;
        for (std::size_t p = off[u]; p < off[u + 1]; ++p) {
          const Arc& arc = arcs[p];
          if (done_right[arc.to]) continue;
          const std::int64_t nd = d + a[u] + b[arc.to] - arc.w;
          if (nd < dist_right[arc.to]) {
            if (dist_right[arc.to] == kInf) touched_right.push_back(arc.to);
            dist_right[arc.to] = nd;
            pred_right[arc.to] = static_cast<std::int64_t>(u);
            heap.push({nd, static_cast<std::uint32_t>(n + arc.to)});
          }
        }
      } else {
        const std::size_t v = node - n;
        if (done_right[v] || d != dist_right[v]) continue;
        done_right[v] = 1;
        if (match_right[v] == -1) {
          found = static_cast<std::int64_t>(v);
          total = d;
          break;
        }
        const auto u2 = static_cast<std::size_t>(match_right[v]);
        if (dist_left[u2] == kInf) touched_left.push_back(static_cast<std::uint32_t>(u2));
        dist_left[u2] = d;
        heap.push({d, static_cast<std::uint32_t>(u2)});
      }
    }
    assert(found >= 0);  // the zero-weight self copy always completes a path
    for (std::uint32_t u : touched_left) {
      if (done_left[u] && dist_left[u] < total) a[u] -= total - dist_left[u];
      dist_left[u] = kInf;
      done_left[u] = 0;
    }
    for (std::uint32_t v : touched_right) {
      if (done_right[v] && dist_right[v] < total) b[v] += total - dist_right[v];
      dist_right[v] = kInf;
      done_right[v] = 0;
    }
    touched_left.clear();
    touched_right.clear();
    for (std::int64_t v = found;;) {
      const std::int64_t u = pred_right[v];
      const std::int64_t prev = match_left[u];
      match_left[u] = v;
      match_right[v] = u;
      if (prev == -1) break;
      v = prev;
    }
  }

  FractionalMatching out;
  out.twice_x.assign(edges.size(), 0);
  out.twice_y.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.twice_y[v] = a[v] + b[v];
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    out.twice_x[k] = static_cast<std::uint8_t>((match_left[e.i] == e.j) + (match_left[e.j] == e.i));
  }
  return out;
}

namespace {

class BlossomEngine {
 public:
  BlossomEngine(std::size_t n, std::span<const WeightedPair> edges, BlossomStart start)
      : nv_(static_cast<int>(n)), ne_(static_cast<int>(edges.size())) {
    ei_.resize(ne_);
    ej_.resize(ne_);
    ew_.resize(ne_);
    std::int64_t max_w = 0;
    for (int k = 0; k < ne_; ++k) {
      ei_[k] = static_cast<int>(edges[k].i);
      ej_[k] = static_cast<int>(edges[k].j);
      ew_[k] = 2 * edges[k].w;
      max_w = std::max(max_w, ew_[k]);
    }
    nb_off_.assign(nv_ + 1, 0);
    for (int k = 0; k < ne_; ++k) {
      ++nb_off_[ei_[k] + 1];
      ++nb_off_[ej_[k] + 1];
    }
    for (int v = 0; v < nv_; ++v) nb_off_[v + 1] += nb_off_[v];
    nb_.resize(2 * static_cast<std::size_t>(ne_));
    {
      std::vector<int> fill(nb_off_.begin(), nb_off_.end() - 1);
      for (int k = 0; k < ne_; ++k) {
        nb_[fill[ei_[k]]++] = 2 * k + 1;
        nb_[fill[ej_[k]]++] = 2 * k;
      }
    }

    const std::size_t nb2 = 2 * static_cast<std::size_t>(nv_);
    mate_.assign(nv_, -1);
    label_.assign(nb2, 0);
    labelend_.assign(nb2, -1);
    inblossom_.resize(nv_);
    for (int v = 0; v < nv_; ++v) inblossom_[v] = v;
    blossomparent_.assign(nb2, -1);
    childs_.assign(nb2, {});
    endps_.assign(nb2, {});
    blossombase_.assign(nb2, -1);
    for (int v = 0; v < nv_; ++v) blossombase_[v] = v;
    bestedge_.assign(nb2, -1);
    bestedges_.assign(nb2, {});
    has_bestedges_.assign(nb2, 0);
    for (int b = 2 * nv_ - 1; b >= nv_; --b) unused_.push_back(b);
    dual_.assign(nb2, 0);
    allow_.assign(ne_, 0);
    bestedgeto_.assign(nb2, -1);

    if (start == BlossomStart::Empty) {
      for (int v = 0; v < nv_; ++v) dual_[v] = max_w;
    } else {
      warm_start(edges);
    }
  }

  std::vector<std::int64_t> solve() {
    run();
    std::vector<std::int64_t> out(nv_, -1);
    for (int v = 0; v < nv_; ++v) {
      if (mate_[v] >= 0) out[v] = mate_[v] >> 1;
    }
    return out;
  }

 private:
  int endpoint(int p) const { return (p & 1) ? ej_[p >> 1] : ei_[p >> 1]; }
  std::int64_t slack(int k) const { return dual_[ei_[k]] + dual_[ej_[k]] - 2 * ew_[k]; }

  static int at(const std::vector<int>& v, int j) {
    const int len = static_cast<int>(v.size());
    return v[static_cast<std::size_t>(((j % len) + len) % len)];
  }
  static int index_of(const std::vector<int>& v, int x) {
    return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
  }

  /// Visits the vertices of (possibly nested) blossom b in child order;
  /// stops early when f returns false.
  template <class F>
  void for_leaves(int b, F&& f) {
    if (b < nv_) {
      f(b);
      return;
    }
    auto& stack = leaf_stack_;
    stack.clear();
    stack.push_back(b);
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      if (t < nv_) {
        if (!f(t)) return;
        continue;
      }
      const auto& ch = childs_[t];
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
  }

  void warm_start(std::span<const WeightedPair> edges) {
    const FractionalMatching frac = max_weight_fractional_matching(nv_, edges);
    for (int v = 0; v < nv_; ++v) dual_[v] = 2 * frac.twice_y[v];

    auto match = [&](int k) {
      if (slack(k) != 0) return;  // not tight: leave both ends to the search
      mate_[ei_[k]] = 2 * k + 1;
      mate_[ej_[k]] = 2 * k;
    };
    // Half edges form vertex-disjoint paths and cycles; take every other edge.
    std::vector<int> half_off(nv_ + 1, 0);
    for (int k = 0; k < ne_; ++k) {
      if (frac.twice_x[k] == 2) {
        match(k);
      } else if (frac.twice_x[k] == 1) {
        ++half_off[ei_[k] + 1];
        ++half_off[ej_[k] + 1];
      }
    }
    for (int v = 0; v < nv_; ++v) half_off[v + 1] += half_off[v];
    std::vector<int> half(static_cast<std::size_t>(half_off[nv_]));
    {
      std::vector<int> fill(half_off.begin(), half_off.end() - 1);
      for (int k = 0; k < ne_; ++k) {
        if (frac.twice_x[k] == 1) {
          half[fill[ei_[k]]++] = k;
          half[fill[ej_[k]]++] = k;
        }
      }
    }
    std::vector<std::uint8_t> seen(nv_, 0);
    auto walk = [&](int start) {
      int cur = start;
      int prev_edge = -1;
      bool take = true;
      seen[cur] = 1;
      for (;;) {
        int next = -1;
        for (int p = half_off[cur]; p < half_off[cur + 1]; ++p) {
          if (half[p] != prev_edge) {
            next = half[p];
            break;
          }
        }
        if (next == -1) return;
        const int other = ei_[next] == cur ? ej_[next] : ei_[next];
        if (other == start) return;  // closing edge of a cycle
        if (take && mate_[cur] == -1 && mate_[other] == -1) match(next);
        take = !take;
        prev_edge = next;
        cur = other;
        seen[cur] = 1;
      }
    };
    for (int v = 0; v < nv_; ++v) {
      if (!seen[v] && half_off[v + 1] - half_off[v] == 1) walk(v);
    }
    for (int v = 0; v < nv_; ++v) {
      if (!seen[v] && half_off[v + 1] - half_off[v] == 2) walk(v);
    }
  }

  void assign_label(int w, int t, int p) {
    const int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      for_leaves(b, [&](int v) {
        queue_.push_back(v);
        return true;
      });
    } else {
      const int base = blossombase_[b];
      assert(mate_[base] >= 0);
      assign_label(endpoint(mate_[base]), 1, mate_[base] ^ 1);
    }
  }

  /// Traces back from v and w; returns the base of the new blossom, or -1
  /// when the trees differ (augmenting path).
  int scan_blossom(int v, int w) {
    path_.clear();
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path_.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint(labelend_[b]);
        b = inblossom_[v];
        v = endpoint(labelend_[b]);
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path_) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = ei_[k];
    int w = ej_[k];
    const int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    const int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto& path = childs_[b];
    auto& endps = endps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint(labelend_[bv]);
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint(labelend_[bw]);
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dual_[b] = 0;
    for_leaves(b, [&](int x) {
      if (label_[inblossom_[x]] == 2) queue_.push_back(x);
      inblossom_[x] = b;
      return true;
    });

    touched_.clear();
    auto consider = [&](int kk) {
      int i = ei_[kk];
      int j = ej_[kk];
      if (inblossom_[j] == b) std::swap(i, j);
      const int bj = inblossom_[j];
      if (bj != b && label_[bj] == 1 &&
          (bestedgeto_[bj] == -1 || slack(kk) < slack(bestedgeto_[bj]))) {
        if (bestedgeto_[bj] == -1) touched_.push_back(bj);
        bestedgeto_[bj] = kk;
      }
    };
    for (int sub : childs_[b]) {
      if (!has_bestedges_[sub]) {
        for_leaves(sub, [&](int x) {
          for (int p = nb_off_[x]; p < nb_off_[x + 1]; ++p) consider(nb_[p] >> 1);
          return true;
        });
      } else {
        for (int kk : bestedges_[sub]) consider(kk);
      }
      has_bestedges_[sub] = 0;
      bestedges_[sub].clear();
      bestedge_[sub] = -1;
    }
    std::sort(touched_.begin(), touched_.end());
    auto& mine = bestedges_[b];
    mine.clear();
    for (int bj : touched_) {
      mine.push_back(bestedgeto_[bj]);
      bestedgeto_[bj] = -1;
    }
    has_bestedges_[b] = 1;
    bestedge_[b] = -1;
    for (int kk : mine) {
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
    }
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : childs_[b]) {
      blossomparent_[s] = -1;
      if (s < nv_) {
        inblossom_[s] = s;
      } else if (endstage && dual_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for_leaves(s, [&](int v) {
          inblossom_[v] = s;
          return true;
        });
      }
    }
    if (!endstage && label_[b] == 2) {
      // Relabel the children along the even-length path through the blossom.
      const auto& ch = childs_[b];
      const auto& ep = endps_[b];
      const int entrychild = inblossom_[endpoint(labelend_[b] ^ 1)];
      int j = index_of(ch, entrychild);
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= static_cast<int>(ch.size());
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint(p ^ 1)] = 0;
        label_[endpoint(at(ep, j - endptrick) ^ endptrick ^ 1)] = 0;
        assign_label(endpoint(p ^ 1), 2, p);
        allow_[at(ep, j - endptrick) >> 1] = 1;
        j += jstep;
        p = at(ep, j - endptrick) ^ endptrick;
        allow_[p >> 1] = 1;
        j += jstep;
      }
      int bv = at(ch, j);
      label_[endpoint(p ^ 1)] = label_[bv] = 2;
      labelend_[endpoint(p ^ 1)] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (at(ch, j) != entrychild) {
        bv = at(ch, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int found = -1;
        for_leaves(bv, [&](int v) {
          if (label_[v] != 0) {
            found = v;
            return false;
          }
          return true;
        });
        if (found != -1) {
          label_[found] = 0;
          label_[endpoint(mate_[blossombase_[bv]])] = 0;
          assign_label(found, 2, labelend_[found]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    childs_[b].clear();
    endps_[b].clear();
    blossombase_[b] = -1;
    bestedges_[b].clear();
    has_bestedges_[b] = 0;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  /// Swaps matched and unmatched edges on the even path from v to the base
  /// of blossom b, making v the new base.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nv_) augment_blossom(t, v);
    auto& ch = childs_[b];
    auto& ep = endps_[b];
    const int i = index_of(ch, t);
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= static_cast<int>(ch.size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = at(ch, j);
      const int p = at(ep, j - endptrick) ^ endptrick;
      if (t >= nv_) augment_blossom(t, endpoint(p));
      j += jstep;
      t = at(ch, j);
      if (t >= nv_) augment_blossom(t, endpoint(p ^ 1));
      mate_[endpoint(p)] = p ^ 1;
      mate_[endpoint(p ^ 1)] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    blossombase_[b] = blossombase_[ch[0]];
  }

  /// Flips the alternating path from s up to its tree root; s is matched
  /// through endpoint p afterwards (p == -1 leaves s exposed). A walk that
  /// starts in an unlabeled exposed blossom only re-bases that blossom.
  void walk_to_root(int s, int p) {
    for (;;) {
      const int bs = inblossom_[s];
      if (label_[bs] == 0) {
        if (bs >= nv_) augment_blossom(bs, s);
        mate_[s] = p;
        return;
      }
      if (bs >= nv_) augment_blossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) return;
      const int t = endpoint(labelend_[bs]);
      const int bt = inblossom_[t];
      s = endpoint(labelend_[bt]);
      const int j = endpoint(labelend_[bt] ^ 1);
      if (bt >= nv_) augment_blossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }

  void augment_matching(int k) {
    walk_to_root(ei_[k], 2 * k + 1);
    walk_to_root(ej_[k], 2 * k);
  }

  void run() {
    const std::size_t nb2 = 2 * static_cast<std::size_t>(nv_);
    for (;;) {
      poll_deadline();
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (std::size_t b = static_cast<std::size_t>(nv_); b < nb2; ++b) {
        bestedges_[b].clear();
        has_bestedges_[b] = 0;
      }
      std::fill(allow_.begin(), allow_.end(), 0);
      queue_.clear();

      int roots = 0;
      for (int v = 0; v < nv_; ++v) {
        if (mate_[v] == -1 && dual_[v] > 0 && label_[inblossom_[v]] == 0) {
          assign_label(v, 1, -1);
          ++roots;
        }
      }
      if (roots == 0) break;

      bool stage_done = false;
      for (;;) {
        while (!queue_.empty() && !stage_done) {
          poll_deadline();
          const int v = queue_.back();
          queue_.pop_back();
          for (int q = nb_off_[v]; q < nb_off_[v + 1]; ++q) {
            const int p = nb_[q];
            const int k = p >> 1;
            const int w = endpoint(p);
            if (inblossom_[v] == inblossom_[w]) continue;
            std::int64_t kslack = 0;
            if (!allow_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allow_[k] = 1;
            }
            if (allow_[k]) {
              const int bw = inblossom_[w];
              if (label_[bw] == 0) {
                if (mate_[blossombase_[bw]] == -1) {
                  // Exposed zero-dual vertex: augment into it.
                  augment_matching(k);
                  stage_done = true;
                  break;
                }
                assign_label(w, 2, p ^ 1);
              } else if (label_[bw] == 1) {
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  stage_done = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              const int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (stage_done) break;

        int deltatype = -1;
        std::int64_t delta = 0;
        int deltaedge = -1;
        int deltablossom = -1;
        int deltavertex = -1;
        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 1 && (deltatype == -1 || dual_[v] < delta)) {
            delta = dual_[v];
            deltatype = 1;
            deltavertex = v;
          }
        }
        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            const std::int64_t d = slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (std::size_t b = 0; b < nb2; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            const std::int64_t kslack = slack(bestedge_[b]);
            assert(kslack % 2 == 0);
            const std::int64_t d = kslack / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              (deltatype == -1 || dual_[b] < delta)) {
            delta = dual_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        assert(deltatype != -1);

        for (int v = 0; v < nv_; ++v) {
          const int lbl = label_[inblossom_[v]];
          if (lbl == 1) {
            dual_[v] -= delta;
          } else if (lbl == 2) {
            dual_[v] += delta;
          }
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) {
              dual_[b] += delta;
            } else if (label_[b] == 2) {
              dual_[b] -= delta;
            }
          }
        }

        if (deltatype == 1) {
          // An S-vertex dual reached zero. If it is matched, hand the
          // exposure over to it so its root becomes matched.
          if (mate_[deltavertex] != -1) walk_to_root(deltavertex, -1);
          stage_done = true;
          break;
        }
        if (deltatype == 2) {
          allow_[deltaedge] = 1;
          int i = ei_[deltaedge];
          int j = ej_[deltaedge];
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allow_[deltaedge] = 1;
          queue_.push_back(ei_[deltaedge]);
        } else {
          expand_blossom(deltablossom, false);
        }
      }

      for (int b = nv_; b < 2 * nv_; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) {
          expand_blossom(b, true);
        }
      }
    }
  }

  int nv_;
  int ne_;
  std::vector<int> ei_, ej_;
  std::vector<std::int64_t> ew_;
  std::vector<int> nb_off_, nb_;

  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> childs_;
  std::vector<std::vector<int>> endps_;
  std::vector<int> blossombase_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> bestedges_;
  std::vector<std::uint8_t> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dual_;
  std::vector<std::uint8_t> allow_;
  std::vector<int> queue_;

  std::vector<int> leaf_stack_;
  std::vector<int> path_;
  std::vector<int> touched_;
  std::vector<int> bestedgeto_;
};

}  // namespace

std::vector<std::int64_t> max_weight_matching(std::size_t n, std::span<const WeightedPair> edges,
                                              BlossomStart start) {
  if (n == 0 || edges.empty()) return std::vector<std::int64_t>(n, -1);
  BlossomEngine engine(n, edges, start);
  return engine.solve();
}

}  // namespace detail

namespace {
constexpr Weight kMaxBlossomWeight = Weight{1} << 58;
}

Matching blossom_max_weight_matching(const WeightedGraph& g, const EdgeMask& available,
                                     BlossomStart start) {
  if (g.max_demand() > kMaxBlossomWeight) {
    throw std::overflow_error("demand too large for the blossom dual arithmetic");
  }
  // Compact to vertices touched by available edges.
  std::vector<std::uint32_t> local(g.num_vertices(), std::numeric_limits<std::uint32_t>::max());
  std::vector<VertexId> global;
  std::vector<detail::WeightedPair> pairs;
  std::vector<EdgeId> ids;
  auto id_of = [&](VertexId v) {
    if (local[v] == std::numeric_limits<std::uint32_t>::max()) {
      local[v] = static_cast<std::uint32_t>(global.size());
      global.push_back(v);
    }
    return local[v];
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!available[e]) continue;
    const Edge& ed = g.edge(e);
    const auto i = id_of(ed.u);
    const auto j = id_of(ed.v);
    pairs.push_back({i, j, static_cast<std::int64_t>(ed.w)});
    ids.push_back(e);
  }
  const auto mate = detail::max_weight_matching(global.size(), pairs, start);
  Matching m(g.num_vertices());
  for (std::size_t lv = 0; lv < global.size(); ++lv) {
    const std::int64_t k = mate[lv];
    if (k >= 0 && pairs[static_cast<std::size_t>(k)].i == lv) {
      m.add(g, ids[static_cast<std::size_t>(k)]);
    }
  }
  return m;
}

DisjointMatching blossom_it(const WeightedGraph& g, int k, BlossomStart start,
                            const ClassHook& after_class) {
  DisjointMatching s(g.num_edges(), k);
  for (ClassId c = 0; c < k; ++c) {
    const EdgeMask available = unassigned_mask(s);
    const Matching m = blossom_max_weight_matching(g, available, start);
    for (EdgeId e : m.edges) s.assign(g, e, c);
    if (after_class) after_class(s, c);
  }
  return s;
}

}  // namespace kdjm
