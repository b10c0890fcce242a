#include "homcat/corpus.hpp"

#include <sstream>

namespace homcat {

namespace {

DegreewiseModule loewy2_rigid(int nvars) {
  const AlgebraKind gamma{Kind::twostep, nvars};
  if (nvars == 2) {
    // Pieces Q^2, Q^1 with x_0 = [1 0], x_1 = [0 1]: rigid and indecomposable.
    ModuleBuilder b(gamma);
    b.set_dim(0, 2);
    b.set_dim(1, 1);
    b.set_action(0, 0, RatMatrix::from_ints(1, 2, {1, 0}));
    b.set_action(1, 0, RatMatrix::from_ints(1, 2, {0, 1}));
    return b.finalize();
  }
  // Two-step reduction of the Koszul dual of the shifted radical: rigid by the
  // duality transfer of the vanishing self-extensions of the radical.
  const AlgebraKind ext{Kind::exterior, nvars};
  const DegreewiseModule j1 = shift(truncate(construct_free(ext, {0}), 1), 1);
  return gamma_reduce(koszul_dual(j1, 3).dual);
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"simple:d", "free", "radical:p", "twistmod:t", "nonsheaf-pair", "loewy2-rigid"};
}

CorpusEntry builtin(const std::string& name, int nvars) {
  if (nvars < 2) throw input_error("builtin: nvars must be at least 2");
  const AlgebraKind ext{Kind::exterior, nvars};
  CorpusEntry e;
  e.name = name;

  auto parse_param = [&name]() {
    const auto pos = name.find(':');
    if (pos == std::string::npos) throw input_error("builtin name needs a :parameter");
    return std::stoi(name.substr(pos + 1));
  };

  if (name.rfind("simple:", 0) == 0) {
    const int d = parse_param();
    e.module = construct_simple(ext, d);
    e.expected = {{"rank", "1"},
                  {"nice", d == 0 ? "nice" : "concentrated"},
                  {"exceptional", "true"}};
    return e;
  }
  if (name == "free") {
    e.module = construct_free(ext, {0});
    e.expected = {{"rank", "0"}, {"nice", "nice"}, {"stably-zero", "true"}};
    return e;
  }
  if (name.rfind("radical:", 0) == 0) {
    const int p = parse_param();
    if (p < 0) throw input_error("builtin radical: power must be nonnegative");
    e.module = truncate(construct_free(ext, {0}), p);
    e.expected = {{"linear-shifted", "true"}};
    return e;
  }
  if (name.rfind("twistmod:", 0) == 0) {
    const int t = parse_param();
    e.module = sheaf_module_for_twist(ext, t);
    e.expected = {{"rank", "1"}, {"nice", "nice"}, {"exceptional", "true"}};
    return e;
  }
  if (name == "nonsheaf-pair") {
    e.module = direct_sum(construct_simple(ext, 0), construct_simple(ext, -1));
    e.expected = {{"nice", "not-nice"}};
    return e;
  }
  if (name == "loewy2-rigid") {
    e.module = loewy2_rigid(nvars);
    e.expected = {{"lemma14", "verified"}};
    return e;
  }
  std::ostringstream os;
  os << "unknown builtin name: " << name << " (valid:";
  for (const auto& n : builtin_names()) os << " " << n;
  os << ")";
  throw input_error(os.str());
}

std::optional<DegreewiseModule> random_nice(int nvars, const std::map<int, int>& profile,
                                            std::uint64_t seed, int attempts) {
  if (attempts < 1) throw input_error("random_nice: attempts must be positive");
  const AlgebraKind ext{Kind::exterior, nvars};
  Rng rng(seed);
  for (int k = 0; k < attempts; ++k) {
    const std::uint64_t module_seed = rng.fork();
    const DegreewiseModule m = random_module(ext, profile, module_seed);
    const DegreewiseModule core = strip_free_summands(m).core;
    if (core.is_zero()) continue;
    const NiceResult nice = is_nice(core, 6, rng.fork());
    if (nice.verdict == NiceVerdict::nice_certified_randomized) return core;
  }
  return std::nullopt;
}

std::vector<CorpusEntry> exterior_linear_corpus(int nvars) {
  const AlgebraKind ext{Kind::exterior, nvars};
  std::vector<CorpusEntry> out;
  const DegreewiseModule R = construct_free(ext, {0});
  const DegreewiseModule k = construct_simple(ext, 0);

  CorpusEntry simple{"simple:0", k, {}};
  out.push_back(simple);
  out.push_back({"free", R, {}});
  out.push_back({"radical:1-shifted", shift(truncate(R, 1), 1), {}});
  out.push_back({"radical:2-shifted", shift(truncate(R, 2), 2), {}});
  out.push_back({"syzygy2-shifted", shift(syzygy(syzygy(k)), 2), {}});
  out.push_back({"simple-plus-radical", direct_sum(k, shift(truncate(R, 1), 1)), {}});
  return out;
}

std::vector<SymmetricFamily> symmetric_linear_corpus(int nvars) {
  const AlgebraKind ext{Kind::exterior, nvars};
  const AlgebraKind sym{Kind::symmetric, nvars};
  std::vector<SymmetricFamily> out;
  out.push_back({"S", [sym](int hi) { return construct_free(sym, {0}, hi); }});
  out.push_back({"S+S", [sym](int hi) { return construct_free(sym, {0, 0}, hi); }});
  out.push_back({"simple0", [sym](int hi) {
                   DegreewiseModule m = construct_simple(sym, 0);
                   m.horizon = hi;
                   return m;
                 }});
  out.push_back({"E(radical-shifted)", [ext](int hi) {
                   const DegreewiseModule j1 =
                       shift(truncate(construct_free(ext, {0}), 1), 1);
                   return koszul_dual(j1, hi).dual;
                 }});
  out.push_back({"E(syzygy2-shifted)", [ext](int hi) {
                   const DegreewiseModule m =
                       shift(syzygy(syzygy(construct_simple(ext, 0))), 2);
                   return koszul_dual(m, hi).dual;
                 }});
  out.push_back({"S+E(radical-shifted)", [ext, sym](int hi) {
                   const DegreewiseModule j1 =
                       shift(truncate(construct_free(ext, {0}), 1), 1);
                   return direct_sum(construct_free(sym, {0}, hi), koszul_dual(j1, hi).dual);
                 }});
  return out;
}

std::vector<CorpusEntry> nice_corpus(int nvars) {
  std::vector<CorpusEntry> out;
  for (int t = -2; t <= 2; ++t) {
    std::ostringstream os;
    os << "twistmod:" << t;
    out.push_back(builtin(os.str(), nvars));
  }
  return out;
}

}  // namespace homcat
