#include "kdjm/algorithm.hpp"

#include <charconv>
#include <stdexcept>

#include "kdjm/coloring.hpp"
#include "kdjm/iterative.hpp"

namespace kdjm {

std::string to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::GreedyIt: return "greedy_it";
    case AlgorithmKind::GpaIt: return "gpa_it";
    case AlgorithmKind::BlossomIt: return "blossom_it";
    case AlgorithmKind::BGreedyExtend: return "bgreedy_extend";
    case AlgorithmKind::NodeCentered: return "node_centered";
    case AlgorithmKind::KEc: return "k_ec";
  }
  return "greedy_it";
}

AlgorithmKind parse_algorithm_kind(std::string_view name) {
  for (auto kind : {AlgorithmKind::GreedyIt, AlgorithmKind::GpaIt, AlgorithmKind::BlossomIt,
                    AlgorithmKind::BGreedyExtend, AlgorithmKind::NodeCentered, AlgorithmKind::KEc}) {
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

namespace {

template <class T>
T parse_int(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("bad value for '" + std::string(key) + "': '" + std::string(value) + "'");
  }
  return out;
}

}  // namespace

AlgorithmConfig AlgorithmConfig::parse(std::string_view text) {
  AlgorithmConfig cfg;
  const auto colon = text.find(':');
  cfg.kind = parse_algorithm_kind(text.substr(0, colon));
  if (colon == std::string_view::npos) return cfg;

  const std::string_view rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const std::size_t end = std::min(rest.find(',', pos), rest.size());
    const std::string_view item = rest.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    auto require = [&](AlgorithmKind kind) {
      if (cfg.kind != kind) {
        throw std::invalid_argument("option '" + std::string(key) + "' does not apply to " + cfg.name());
      }
    };
    if (key == "post") {
      cfg.post.strategy = parse_strategy(value);
    } else if (key == "roma_rounds") {
      cfg.post.roma_rounds = parse_int<int>(key, value);
      if (cfg.post.roma_rounds < 1) throw std::invalid_argument("roma_rounds must be at least 1");
    } else if (key == "seed") {
      cfg.seed = parse_int<std::uint64_t>(key, value);
    } else if (key == "rating") {
      require(AlgorithmKind::NodeCentered);
      cfg.rating = parse_rating(value);
    } else if (key == "theta") {
      require(AlgorithmKind::NodeCentered);
      cfg.theta = Theta::parse(value);
    } else if (key == "flags") {
      require(AlgorithmKind::KEc);
      cfg.flags = KecFlags::parse(value);
    } else if (key == "start") {
      require(AlgorithmKind::BlossomIt);
      if (value == "fractional") {
        cfg.start = BlossomStart::Fractional;
      } else if (value == "empty") {
        cfg.start = BlossomStart::Empty;
      } else {
        throw std::invalid_argument("start must be 'fractional' or 'empty'");
      }
    } else {
      throw std::invalid_argument("unknown option '" + std::string(key) + "'");
    }
  }
  return cfg;
}

std::string AlgorithmConfig::options() const {
  std::string out;
  auto add = [&](const std::string& kv) {
    if (!out.empty()) out += ',';
    out += kv;
  };
  switch (kind) {
    case AlgorithmKind::NodeCentered:
      add("rating=" + kdjm::to_string(rating));
      add("theta=" + theta.to_string());
      break;
    case AlgorithmKind::KEc:
      add("flags=" + flags.to_string());
      break;
    case AlgorithmKind::BlossomIt:
      add(std::string("start=") + (start == BlossomStart::Fractional ? "fractional" : "empty"));
      break;
    default:
      break;
  }
  if (post.strategy != Strategy::None) add("post=" + kdjm::to_string(post.strategy));
  if (post.strategy == Strategy::Roma) {
    add("roma_rounds=" + std::to_string(post.roma_rounds));
    if (seed) add("seed=" + std::to_string(*seed));
  }
  return out;
}

std::string AlgorithmConfig::to_string() const {
  const std::string opts = options();
  return opts.empty() ? name() : name() + ":" + opts;
}

DisjointMatching run_algorithm(const WeightedGraph& g, int k, const AlgorithmConfig& config,
                               std::uint64_t seed) {
  PostprocessConfig post = config.post;
  post.seed = config.seed.value_or(seed);
  Postprocessor pp(g, post);

  auto iterative = [&](auto&& algorithm) {
    DisjointMatching s = algorithm(pp.hook());
    pp.all_completed(s);
    return s;
  };
  auto one_shot = [&](DisjointMatching s) {
    apply_strategy(g, s, post);
    return s;
  };

  switch (config.kind) {
    case AlgorithmKind::GreedyIt:
      return iterative([&](const ClassHook& h) { return greedy_it(g, k, h); });
    case AlgorithmKind::GpaIt:
      return iterative([&](const ClassHook& h) { return gpa_it(g, k, h); });
    case AlgorithmKind::BlossomIt:
      return iterative([&](const ClassHook& h) { return blossom_it(g, k, config.start, h); });
    case AlgorithmKind::BGreedyExtend:
      return one_shot(b_greedy_and_extend(g, k));
    case AlgorithmKind::NodeCentered:
      return one_shot(node_centered(g, k, config.rating, config.theta));
    case AlgorithmKind::KEc:
      return one_shot(k_ec(g, k, config.flags));
  }
  throw std::logic_error("unhandled algorithm");
}

}  // namespace kdjm
