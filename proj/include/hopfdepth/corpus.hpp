#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hopfdepth/characters.hpp"
#include "hopfdepth/depth.hpp"
#include "hopfdepth/group.hpp"

namespace hopfdepth {

/// Built-in name, or a path to a group file:
///   {"name": "...", "degree": n, "generators": [[1-based images], ...]}
///   {"name": "...", "cayley": [[0-based products], ...]}   (row 0 is the identity)
/// Throws GroupError or ParseError.
FiniteGroup load_group(const std::string& ref);

/// A group together with both of its Hopf algebras and their irreducibles,
/// computed once and shared by every pair over that group.
struct GroupContext {
    FiniteGroup group;
    std::vector<Subgroup> subgroups;
    HopfAlgebraPtr algebra;
    IrrSetPtr irr;
    HopfAlgebraPtr dual;  // null unless requested
    IrrSetPtr irr_dual;
};

using GroupContextPtr = std::shared_ptr<const GroupContext>;

GroupContextPtr make_group_context(FiniteGroup g, bool with_dual, std::size_t subgroup_cap = 24);

/// k[S] ⊆ k[G] for subgroups[index]; id "<G>/group/<index>".
SubalgebraPair group_pair(const GroupContext& ctx, std::size_t index);
/// k^{G/N} ⊆ k^G for a normal subgroups[index]; id "<G>/dual/<index>".
/// Throws NotNormal.
SubalgebraPair dual_pair(const GroupContext& ctx, std::size_t index);

/// Index into ctx.subgroups: a decimal index, or generators in cycle
/// notation ("" is the trivial subgroup). Throws GroupError.
std::size_t find_subgroup(const GroupContext& ctx, const std::string& selector);

struct CorpusSpec {
    std::vector<std::string> groups;
    bool include_duals = true;
    std::size_t subgroup_cap = 24;
};

/// All ten built-in groups, duals included.
CorpusSpec default_corpus();
/// {"groups": [...], "include_duals": bool, "subgroup_cap": n}; missing keys
/// take the defaults. Throws ParseError.
CorpusSpec load_corpus_spec(const std::string& path);

struct SurveyRecord {
    std::string id;
    std::string group;
    std::string kind;      // "group" or "dual"
    std::string subgroup;  // subgroup_label
    std::size_t dim_h = 0;
    std::size_t dim_k = 0;
    Verdict verdict;
    /// Non-empty when this record counts as a failure.
    std::vector<std::string> problems;
    /// Set when evaluating the pair threw; the verdict is then empty.
    std::string internal_error;
};

struct SurveyReport {
    std::vector<SurveyRecord> records;
    std::size_t pairs = 0;
    std::size_t normal = 0;
    std::size_t depth_two = 0;
    std::size_t agreements = 0;
    /// "<id>: <problem>" lines in record order.
    std::vector<std::string> failures;
    std::size_t internal_errors = 0;
};

/// Problems found in one verdict: disagreement of the five criteria, a
/// failed vanishing step or integral dichotomy, failed regular induction,
/// failed class formulas, or (on dual pairs) a pair that is not normal and
/// depth two.
std::vector<std::string> verdict_problems(const Verdict& v, const std::string& kind);

/// Runs theorem_check on every pair of the corpus with `jobs` worker
/// threads. Records are ordered by (group position, kind, subgroup index)
/// regardless of `jobs`.
SurveyReport run_survey(const CorpusSpec& spec, std::size_t jobs = 1);

}  // namespace hopfdepth
