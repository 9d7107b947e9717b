#include "hopfdepth/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <thread>

#include "hopfdepth/constructors.hpp"
#include "hopfdepth/errors.hpp"
#include "json.hpp"

namespace hopfdepth {
namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

FiniteGroup group_from_json(const json& j, const std::string& origin) {
    try {
        const std::string name = j.value("name", std::filesystem::path(origin).stem().string());
        if (j.contains("generators")) {
            const std::size_t degree = j.at("degree").get<std::size_t>();
            std::vector<Permutation> gens;
            for (const auto& images : j.at("generators")) {
                const auto one_based = images.get<std::vector<std::uint32_t>>();
                if (one_based.size() != degree)
                    throw ParseError(origin + ": generator length does not match degree");
                gens.push_back(Permutation::from_one_based(one_based));
            }
            return group_from_generators(name, degree, gens);
        }
        if (j.contains("cayley")) {
            const auto table = j.at("cayley").get<std::vector<std::vector<std::size_t>>>();
            std::vector<std::string> labels;
            if (j.contains("labels")) {
                labels = j.at("labels").get<std::vector<std::string>>();
            } else {
                for (std::size_t i = 0; i < table.size(); ++i) labels.push_back("g" + std::to_string(i));
            }
            for (const auto& row : table)
                if (row.size() != table.size()) throw ParseError(origin + ": Cayley table is not square");
            return FiniteGroup(name, std::move(labels), table);
        }
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    throw ParseError(origin + ": group file needs \"generators\" or \"cayley\"");
}

/// Calls body(i) for i in [0, n) on up to `jobs` threads.
template <class F>
void parallel_for(std::size_t n, std::size_t jobs, F body) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) body(i);
    };
    const std::size_t threads = std::min(jobs, n);
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

FiniteGroup load_group(const std::string& ref) {
    const auto& names = builtin_group_names();
    if (std::find(names.begin(), names.end(), ref) != names.end() || ref == "C2×C2" || ref == "V4")
        return builtin_group(ref);
    if (!std::filesystem::exists(ref)) throw GroupError("unknown group or missing file: " + ref);
    return group_from_json(read_json_file(ref), ref);
}

GroupContextPtr make_group_context(FiniteGroup g, bool with_dual, std::size_t subgroup_cap) {
    if (g.order() > subgroup_cap) throw CapExceeded(g.name() + " has order above the cap " + std::to_string(subgroup_cap));
    auto ctx = std::make_shared<GroupContext>(GroupContext{std::move(g), {}, nullptr, nullptr, nullptr, nullptr});
    ctx->subgroups = enumerate_subgroups(ctx->group, subgroup_cap);
    ctx->algebra = group_algebra(ctx->group);
    ctx->irr = std::make_shared<const IrrSet>(irr_group_algebra(ctx->group, ctx->algebra));
    if (with_dual) {
        ctx->dual = dual_group_algebra(ctx->group);
        ctx->irr_dual = std::make_shared<const IrrSet>(irr_dual_group_algebra(ctx->group, ctx->dual));
    }
    return ctx;
}

SubalgebraPair group_pair(const GroupContext& ctx, std::size_t index) {
    const Subgroup& s = ctx.subgroups.at(index);
    auto k = std::make_shared<const HopfSubalgebra>(subgroup_subalgebra(ctx.group, s, ctx.algebra));
    const FiniteGroup sub = subgroup_as_group(ctx.group, s, subgroup_label(ctx.group, s));
    auto irr_k = std::make_shared<const IrrSet>(irr_group_algebra(sub, k->algebra()));
    return SubalgebraPair(ctx.group.name() + "/group/" + std::to_string(index), k, ctx.irr, irr_k);
}

SubalgebraPair dual_pair(const GroupContext& ctx, std::size_t index) {
    if (!ctx.dual) throw Error("group context was built without the dual algebra");
    const Subgroup& n = ctx.subgroups.at(index);
    auto k = std::make_shared<const HopfSubalgebra>(dual_quotient_subalgebra(ctx.group, n, ctx.dual));
    auto irr_k = std::make_shared<const IrrSet>(irr_idempotent_basis(k->algebra()));
    return SubalgebraPair(ctx.group.name() + "/dual/" + std::to_string(index), k, ctx.irr_dual, irr_k);
}

std::size_t find_subgroup(const GroupContext& ctx, const std::string& selector) {
    const bool digits = !selector.empty() && std::all_of(selector.begin(), selector.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
    if (digits) {
        const std::size_t i = std::stoul(selector);
        if (i >= ctx.subgroups.size())
            throw GroupError("subgroup index " + selector + " out of range (0.." +
                             std::to_string(ctx.subgroups.size() - 1) + ")");
        return i;
    }
    const auto& perms = ctx.group.permutations();
    if (!perms) throw GroupError("cycle selectors need a permutation group; use an index");
    std::vector<std::size_t> gens;
    for (const auto& p : parse_cycle_list(selector, perms->front().degree())) {
        const auto idx = ctx.group.index_of(p);
        if (!idx) throw GroupError("generator " + p.cycle_string() + " is not in " + ctx.group.name());
        gens.push_back(*idx);
    }
    const Subgroup s = generate_subgroup(ctx.group, gens);
    for (std::size_t i = 0; i < ctx.subgroups.size(); ++i)
        if (ctx.subgroups[i] == s) return i;
    throw Error("generated subgroup missing from the enumeration");
}

CorpusSpec default_corpus() {
    return CorpusSpec{builtin_group_names(), true, 24};
}

CorpusSpec load_corpus_spec(const std::string& path) {
    const json j = read_json_file(path);
    CorpusSpec spec = default_corpus();
    try {
        if (j.contains("groups")) spec.groups = j.at("groups").get<std::vector<std::string>>();
        if (j.contains("include_duals")) spec.include_duals = j.at("include_duals").get<bool>();
        if (j.contains("subgroup_cap")) spec.subgroup_cap = j.at("subgroup_cap").get<std::size_t>();
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (spec.groups.empty()) throw ParseError(path + ": corpus lists no groups");
    // relative group files are resolved against the corpus file
    const auto base = std::filesystem::path(path).parent_path();
    for (auto& ref : spec.groups) {
        const auto& names = builtin_group_names();
        const bool builtin = std::find(names.begin(), names.end(), ref) != names.end() || ref == "C2×C2" || ref == "V4";
        if (!builtin && std::filesystem::path(ref).is_relative() && std::filesystem::exists(base / ref))
            ref = (base / ref).string();
    }
    return spec;
}

std::vector<std::string> verdict_problems(const Verdict& v, const std::string& kind) {
    std::vector<std::string> out;
    if (!v.all_agree()) out.push_back("normality criteria and depth two disagree");
    if (v.vanishing_step && !*v.vanishing_step) out.push_back("vanishing step failed");
    if (v.integral_values && !*v.integral_values) out.push_back("integral values outside {0, chi(1)}");
    if (!v.regular_induction) out.push_back("regular induction identity failed");
    if (v.formulas)
        for (const auto& f : v.formulas->failures)
            out.push_back(f.identity + " formula failed in class " + std::to_string(f.class_index) + " at character " +
                          std::to_string(f.character));
    if (kind == "dual" && !(v.depth_two && v.central_integral)) out.push_back("dual pair is not normal and depth two");
    return out;
}

SurveyReport run_survey(const CorpusSpec& spec, std::size_t jobs) {
    if (jobs == 0) jobs = 1;

    std::vector<FiniteGroup> groups;
    for (const auto& ref : spec.groups) groups.push_back(load_group(ref));
    std::vector<GroupContextPtr> contexts(groups.size());
    parallel_for(groups.size(), jobs, [&](std::size_t i) {
        contexts[i] = make_group_context(groups[i], spec.include_duals, spec.subgroup_cap);
    });

    struct Task {
        const GroupContext* ctx;
        bool dual;
        std::size_t index;
    };
    std::vector<Task> tasks;
    for (const auto& ctx : contexts) {
        for (std::size_t i = 0; i < ctx->subgroups.size(); ++i) tasks.push_back({ctx.get(), false, i});
        if (spec.include_duals)
            for (std::size_t i = 0; i < ctx->subgroups.size(); ++i)
                if (is_normal(ctx->group, ctx->subgroups[i])) tasks.push_back({ctx.get(), true, i});
    }

    std::vector<SurveyRecord> records(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t t) {
        const Task& task = tasks[t];
        SurveyRecord& r = records[t];
        const GroupContext& ctx = *task.ctx;
        r.group = ctx.group.name();
        r.kind = task.dual ? "dual" : "group";
        r.id = r.group + "/" + r.kind + "/" + std::to_string(task.index);
        r.subgroup = subgroup_label(ctx.group, ctx.subgroups[task.index]);
        r.dim_h = ctx.group.order();
        try {
            const SubalgebraPair pair = task.dual ? dual_pair(ctx, task.index) : group_pair(ctx, task.index);
            r.dim_k = pair.sub().dimension();
            r.verdict = theorem_check(pair);
            r.problems = verdict_problems(r.verdict, r.kind);
        } catch (const std::exception& e) {
            r.internal_error = e.what();
        }
    });

    SurveyReport report;
    for (auto& r : records) {
        ++report.pairs;
        if (!r.internal_error.empty()) {
            ++report.internal_errors;
            report.failures.push_back(r.id + ": internal error: " + r.internal_error);
        } else {
            if (r.verdict.central_integral) ++report.normal;
            if (r.verdict.depth_two) ++report.depth_two;
            if (r.verdict.all_agree() && r.problems.empty()) ++report.agreements;
            for (const auto& p : r.problems) report.failures.push_back(r.id + ": " + p);
        }
    }
    report.records = std::move(records);
    return report;
}

}  // namespace hopfdepth
