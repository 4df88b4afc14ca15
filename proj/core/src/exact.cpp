#include "kdjm/exact.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "kdjm/deadline.hpp"
#include "kdjm/errors.hpp"

namespace kdjm {

namespace {

class Search {
 public:
  Search(const WeightedGraph& g, int k) : g_(g), k_(k), order_(sort_edges_desc(g).order) {
    suffix_.assign(order_.size() + 1, 0);
    for (std::size_t i = order_.size(); i > 0; --i) suffix_[i - 1] = suffix_[i] + g.weight(order_[i - 1]);
    used_.assign(static_cast<std::size_t>(k) * g.num_vertices(), 0);
    choice_.assign(order_.size(), kNoClass);
    best_choice_ = choice_;
  }

  void run() { visit(0, 0, 0); }

  Weight best() const { return best_; }
  std::uint64_t explored() const { return explored_; }

  DisjointMatching solution() const {
    DisjointMatching s(g_.num_edges(), k_);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (best_choice_[i] != kNoClass) s.assign(g_, order_[i], best_choice_[i]);
    }
    return s;
  }

 private:
  std::uint8_t& used(ClassId c, VertexId v) {
    return used_[static_cast<std::size_t>(c) * g_.num_vertices() + v];
  }

  void visit(std::size_t i, Weight current, int open) {
    ++explored_;
    poll_deadline();
    if (current > best_) {
      best_ = current;
      best_choice_ = choice_;
    }
    if (i == order_.size() || current + suffix_[i] <= best_) return;
    const EdgeId e = order_[i];
    const Edge& ed = g_.edge(e);
    // Only the first empty class may be opened; the others are symmetric.
    const int limit = std::min(open + 1, k_);
    for (ClassId c = 0; c < limit; ++c) {
      if (used(c, ed.u) || used(c, ed.v)) continue;
      used(c, ed.u) = used(c, ed.v) = 1;
      choice_[i] = c;
      visit(i + 1, current + ed.w, std::max(open, c + 1));
      choice_[i] = kNoClass;
      used(c, ed.u) = used(c, ed.v) = 0;
      if (current + suffix_[i] <= best_) return;
    }
    visit(i + 1, current, open);
  }

  const WeightedGraph& g_;
  int k_;
  std::vector<EdgeId> order_;
  std::vector<Weight> suffix_;
  std::vector<std::uint8_t> used_;
  std::vector<ClassId> choice_;
  std::vector<ClassId> best_choice_;
  Weight best_ = 0;
  std::uint64_t explored_ = 0;
};

}  // namespace

ExactResult brute_force_kdjm(const WeightedGraph& g, int k, const ExactLimits& limits) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (g.num_edges() > limits.max_edges || k > limits.max_k) {
    throw LimitExceeded("exact search limited to m <= " + std::to_string(limits.max_edges) +
                        " and k <= " + std::to_string(limits.max_k) + " (got m = " +
                        std::to_string(g.num_edges()) + ", k = " + std::to_string(k) + ")");
  }
  Search search(g, k);
  search.run();
  ExactResult r;
  r.weight = search.best();
  r.solution = search.solution();
  r.explored = search.explored();
  return r;
}

namespace {

/// Emits "a + b + c" wrapped at a fixed number of terms per line.
class TermWriter {
 public:
  explicit TermWriter(std::ostream& out) : out_(out) {}

  void term(const std::string& t) {
    if (count_ > 0) {
      if (count_ % kPerLine == 0) {
        out_ << "\n   + ";
      } else {
        out_ << " + ";
      }
    } else {
      out_ << ' ';
    }
    out_ << t;
    ++count_;
  }

 private:
  static constexpr int kPerLine = 8;
  std::ostream& out_;
  int count_ = 0;
};

std::string var(EdgeId e, ClassId c) {
  return "x_e" + std::to_string(e) + "_c" + std::to_string(c);
}

}  // namespace

void export_ilp(const WeightedGraph& g, int k, std::ostream& out) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  out << "\\ k-disjoint matching: n = " << g.num_vertices() << ", m = " << g.num_edges()
      << ", k = " << k << "\n";
  out << "Maximize\n obj:";
  {
    TermWriter w(out);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (ClassId c = 0; c < k; ++c) w.term(std::to_string(g.weight(e)) + " " + var(e, c));
    }
  }
  out << "\nSubject To\n";
  std::vector<EdgeId> inc;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) continue;
    inc.clear();
    for (const Incidence& i : g.incident(v)) inc.push_back(i.edge);
    std::sort(inc.begin(), inc.end());
    for (ClassId c = 0; c < k; ++c) {
      out << " v" << v << "_c" << c << ":";
      TermWriter w(out);
      for (EdgeId e : inc) w.term(var(e, c));
      out << " <= 1\n";
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << " e" << e << ":";
    TermWriter w(out);
    for (ClassId c = 0; c < k; ++c) w.term(var(e, c));
    out << " <= 1\n";
  }
  out << "Binary\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (ClassId c = 0; c < k; ++c) out << ' ' << var(e, c) << '\n';
  }
  out << "End\n";
}

void export_ilp(const WeightedGraph& g, int k, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  export_ilp(g, k, f);
  f.flush();
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

std::string export_ilp_string(const WeightedGraph& g, int k) {
  std::ostringstream os;
  export_ilp(g, k, os);
  return os.str();
}

}  // namespace kdjm
