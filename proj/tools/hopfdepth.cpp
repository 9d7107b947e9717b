// hopfdepth: character tables, depth-two checks and corpus surveys.
//
// Exit codes: 0 success or PASS, 1 usage error, 2 theorem FAIL, 3 internal error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopfdepth/constructors.hpp"
#include "hopfdepth/corpus.hpp"
#include "hopfdepth/errors.hpp"
#include "hopfdepth/serialize.hpp"

using namespace hopfdepth;

namespace {

constexpr int kUsage = 1;
constexpr int kFail = 2;
constexpr int kInternal = 3;

/// Thrown for bad user input that is not a library error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

std::string join(const std::vector<std::size_t>& xs, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
    return s;
}

/// Pads every column of a string grid to its widest cell.
void print_grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], r[c].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

int cmd_table(const std::string& ref, bool dual, bool json, const std::string& out) {
    const FiniteGroup g = load_group(ref);
    const auto h = dual ? dual_group_algebra(g) : group_algebra(g);
    const IrrSet irr = dual ? irr_dual_group_algebra(g, h) : irr_group_algebra(g, h);
    if (json || !out.empty()) {
        write_output(dump_character_table(irr), out);
        return 0;
    }
    std::cout << h->name() << "  dim " << h->dimension() << "  " << irr.size() << " irreducible characters\n";
    std::vector<std::vector<std::string>> grid;
    if (dual) {
        std::vector<std::string> head{"", "deg"};
        for (const auto& l : h->labels()) head.push_back(l);
        grid.push_back(head);
        for (std::size_t i = 0; i < irr.size(); ++i) {
            std::vector<std::string> row{"X" + std::to_string(i), std::to_string(irr.degree(i))};
            for (const auto& v : irr[i].values()) row.push_back(v.to_string());
            grid.push_back(row);
        }
    } else {
        const auto classes = conjugacy_classes(g);
        std::vector<std::string> head{"", "deg"}, sizes{"", "size"};
        for (const auto& c : classes) {
            head.push_back(g.labels()[c.front()]);
            sizes.push_back(std::to_string(c.size()));
        }
        grid.push_back(head);
        grid.push_back(sizes);
        for (std::size_t i = 0; i < irr.size(); ++i) {
            std::vector<std::string> row{"X" + std::to_string(i), std::to_string(irr.degree(i))};
            for (const auto& c : classes) row.push_back(irr[i].values()[c.front()].to_string());
            grid.push_back(row);
        }
    }
    print_grid(grid);
    return 0;
}

const char* b(bool x) { return x ? "true" : "false"; }

int cmd_check(const std::string& ref, const std::string& selector, bool dual, bool json, const std::string& out) {
    const auto ctx = make_group_context(load_group(ref), dual);
    const std::size_t index = find_subgroup(*ctx, selector);
    const Subgroup& s = ctx->subgroups[index];
    if (dual && !is_normal(ctx->group, s))
        throw UsageError("--dual needs a normal subgroup; " + subgroup_label(ctx->group, s) + " is not normal");
    const SubalgebraPair pair = dual ? dual_pair(*ctx, index) : group_pair(*ctx, index);
    const Verdict v = theorem_check(pair);
    const int code = v.pass ? 0 : kFail;
    if (json || !out.empty()) {
        write_output(verdict_to_json(v), out);
        return code;
    }
    std::cout << "pair " << v.pair_id << "  K = " << (dual ? "k^(G/N), N = " : "k[") << subgroup_label(ctx->group, s)
              << (dual ? "" : "]") << "  dim H = " << pair.parent()->dimension()
              << "  dim K = " << pair.sub().dimension() << "\n";
    std::cout << "normal=" << b(v.adjoint_stable) << " depth2=" << b(v.depth_two);
    if (v.minimal_n) std::cout << " N=" << *v.minimal_n;
    std::cout << "\n";
    std::cout << "lemma=" << b(v.lemma) << " central_integral=" << b(v.central_integral)
              << " adjoint_stable=" << b(v.adjoint_stable) << " ideal_equal=" << b(v.ideal_equal) << "\n";
    if (v.witnesses.empty()) {
        std::cout << "witnesses: none\n";
    } else {
        std::cout << "witnesses (alpha in Irr(K), chi in Irr(H)):";
        for (const auto& w : v.witnesses)
            std::cout << " (alpha=" << w.alpha << " chi=" << w.chi << " m_udu=" << w.up_down_up << " m_u=" << w.up
                      << ")";
        std::cout << "\n";
    }
    if (v.vanishing_step) std::cout << "vanishing_step=" << b(*v.vanishing_step) << "\n";
    if (v.integral_values) std::cout << "integral_values=" << b(*v.integral_values) << "\n";
    std::cout << "regular_induction=" << b(v.regular_induction) << "\n";
    const ClassPartition& p = v.partition;
    for (std::size_t i = 0; i < p.classes_h.size(); ++i)
        std::cout << "class " << i << ": C={" << join(p.classes_h[i]) << "} A={" << join(p.classes_k[i])
                  << "} a(1)=" << p.a_sizes[i] << " |A|=" << p.k_sizes[i] << "\n";
    if (!p.well_defined) std::cout << "partition of Irr(K) is not well defined\n";
    if (v.formulas)
        std::cout << "class formulas: " << (v.formulas->ok() ? "ok" : "FAILED") << " ("
                  << v.formulas->restriction_checks << " restriction, " << v.formulas->induction_checks
                  << " induction, " << v.formulas->proportionality_checks << " proportionality)\n";
    std::cout << "verdict: " << (v.pass ? "PASS" : "FAIL") << "\n";
    return code;
}

int cmd_survey(const std::string& corpus, const std::string& out, std::size_t jobs) {
    const CorpusSpec spec = corpus.empty() ? default_corpus() : load_corpus_spec(corpus);
    const SurveyReport r = run_survey(spec, jobs);
    if (!out.empty()) write_output(survey_to_json(r), out);
    std::string current;
    std::size_t pairs = 0, normal = 0, depth2 = 0;
    auto flush = [&] {
        if (!current.empty())
            std::cout << current << ": " << pairs << " pairs, " << normal << " normal, " << depth2 << " depth two\n";
    };
    for (const auto& rec : r.records) {
        const std::string key = rec.group + " (" + rec.kind + ")";
        if (key != current) {
            flush();
            current = key;
            pairs = normal = depth2 = 0;
        }
        ++pairs;
        normal += rec.verdict.central_integral;
        depth2 += rec.verdict.depth_two;
    }
    flush();
    std::cout << "total: " << r.pairs << " pairs, " << r.normal << " normal, " << r.depth_two << " depth two, "
              << r.agreements << " agreements, " << r.failures.size() << " failures\n";
    for (const auto& f : r.failures) std::cout << "FAIL " << f << "\n";
    if (r.internal_errors) return kInternal;
    return r.failures.empty() ? 0 : kFail;
}

int cmd_dump(const std::string& ref, const std::string& kind, const std::string& out) {
    if (kind != "group-algebra" && kind != "dual") throw UsageError("kind must be group-algebra or dual");
    const FiniteGroup g = load_group(ref);
    write_output(dump_algebra(*(kind == "dual" ? dual_group_algebra(g) : group_algebra(g))), out);
    return 0;
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto h = load_algebra(buf.str());
    const AxiomReport r = verify_hopf_axioms(*h);
    for (const auto& a : r.axioms) std::cout << (a.passed ? "ok     " : "FAILED ") << a.name << "\n";
    return r.all_passed() ? 0 : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact character theory and depth-two checks for semisimple Hopf algebras"};
    app.require_subcommand(1);

    std::string group, selector, corpus, out, kind, file;
    bool dual = false, json = false;
    std::size_t jobs = 1;

    auto* table = app.add_subcommand("table", "print the character table of k[G] (or k^G with --dual)");
    table->add_option("group", group, "built-in name or group file")->required();
    table->add_flag("--dual", dual, "use the dual group algebra k^G");
    table->add_flag("--json", json, "print the JSON dump instead of the grid");
    table->add_option("--out", out, "write the JSON dump to a file");

    auto* check = app.add_subcommand("check", "run the depth-two / normality check on one pair");
    check->add_option("group", group, "built-in name or group file")->required();
    check->add_option("--subgroup", selector, "generators in cycle notation, or an index; \"\" is trivial")
        ->required();
    check->add_flag("--dual", dual, "check k^(G/N) inside k^G for a normal N");
    check->add_flag("--json", json, "print the verdict record as JSON");
    check->add_option("--out", out, "write the verdict record to a file");

    auto* survey = app.add_subcommand("survey", "check every pair of a corpus");
    survey->add_option("--corpus", corpus, "corpus file (default: all built-in groups with duals)");
    survey->add_option("--out", out, "write the JSON report to a file");
    survey->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* dump = app.add_subcommand("dump", "write the structure constants of an algebra");
    dump->add_option("group", group, "built-in name or group file")->required();
    dump->add_option("kind", kind, "group-algebra or dual")->required();
    dump->add_option("--out", out, "output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "load an algebra dump and check the Hopf axioms");
    verify->add_option("file", file, "algebra dump")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*table) return cmd_table(group, dual, json, out);
        if (*check) return cmd_check(group, selector, dual, json, out);
        if (*survey) return cmd_survey(corpus, out, jobs);
        if (*dump) return cmd_dump(group, kind, out);
        if (*verify) return cmd_verify(file);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
