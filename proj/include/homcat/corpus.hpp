#pragma once

#include <functional>

#include "homcat/bgg.hpp"
#include "homcat/koszul.hpp"

namespace homcat {

/// Named module with the property names the test pipeline re-derives; the
/// corpus never stores a value the pipeline cannot recompute.
struct CorpusEntry {
  std::string name;
  DegreewiseModule module;
  std::map<std::string, std::string> expected;
};

/// Built-in modules: "simple:d", "free", "radical:p", "twistmod:t",
/// "nonsheaf-pair", "loewy2-rigid". Throws input_error for unknown names,
/// listing the valid ones.
CorpusEntry builtin(const std::string& name, int nvars);

std::vector<std::string> builtin_names();

/// First stripped seeded random module passing the niceness battery, if any.
std::optional<DegreewiseModule> random_nice(int nvars, const std::map<int, int>& profile,
                                            std::uint64_t seed, int attempts);

/// Exterior modules generated in degree 0 with linear resolutions; the
/// work-horses of the duality checks.
std::vector<CorpusEntry> exterior_linear_corpus(int nvars);

/// Windowed symmetric-side linear modules, rebuildable at any horizon — every
/// window-stability harness reconstructs these at hi and hi + 2.
struct SymmetricFamily {
  std::string name;
  std::function<DegreewiseModule(int hi)> build;
};
std::vector<SymmetricFamily> symmetric_linear_corpus(int nvars);

/// Sheaf modules in the strict sense (multiplication-complex homology
/// concentrated in position 0): the twist family.
std::vector<CorpusEntry> nice_corpus(int nvars);

}  // namespace homcat
