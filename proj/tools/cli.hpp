#pragma once

// Command-line driver. `dispatch` is kept in a header so tests can call it
// with in-memory streams.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cinf/cinf.hpp"
#include "cinf/oracle.hpp"
#include "golden.hpp"

namespace cinf::cli {

using json = nlohmann::ordered_json;

namespace exit_code {
constexpr int ok = 0;
constexpr int domain = 1;
constexpr int usage = 2;
}  // namespace exit_code

/// Parsed options for every subcommand; only the active one's fields matter.
struct CommandConfig {
    std::string word;
    std::string left;
    std::string right;
    std::size_t k = 0;
    std::size_t n = 0;
    std::optional<std::size_t> max_total;
    std::string format = "text";
    std::string side = "both";
    std::string dot_path;
    std::string json_path;
    bool all = false;
    bool json_out = false;
    bool compact = false;
    bool via_compaction = false;
    bool vca = false;
    bool min = false;
    bool max = false;
    bool repr = false;
};

namespace detail {

inline json words_json(const std::vector<Word>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(w.str());
    return a;
}

inline json gap_json(const GapRecord& r) {
    return {{"u", r.u.str()}, {"z", r.z.str()}, {"gap", r.gap()}, {"total", r.total()}};
}

/// Writes to `path`, or to `out` when path is "-".
template <class F>
void emit_to(const std::string& path, std::ostream& out, F&& write) {
    if (path == "-") {
        write(out);
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open " + path + " for writing");
    write(f);
}

inline std::optional<std::size_t> env_max_total() {
    const char* v = std::getenv("CINF_MAX_TOTAL");
    if (!v || !*v) return std::nullopt;
    try {
        std::size_t pos = 0;
        const unsigned long long n = std::stoull(v, &pos);
        if (pos != std::string(v).size()) throw std::invalid_argument(v);
        return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
        throw ParseError(std::string("CINF_MAX_TOTAL is not a number: ") + v);
    }
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

// -- subcommands --------------------------------------------------------------

inline int cmd_derive(const CommandConfig& c, std::ostream& out) {
    const Word w = Word::parse(c.word);
    if (!c.all) {
        out << derivative(w).display() << "\n";
        return exit_code::ok;
    }
    for (const auto& level : derivative_chain(w).levels) out << level.display() << "\n";
    return exit_code::ok;
}

inline int cmd_check(const CommandConfig& c, std::ostream& out) {
    const Word w = Word::parse(c.word);
    if (c.k > 0) {
        const bool in = is_k_differentiable(w, c.k);
        out << (in ? "in C^" : "not in C^") << c.k << "\n";
        return in ? exit_code::ok : exit_code::domain;
    }
    if (auto order = failing_order(w)) {
        out << "not C-infinity (fails at level " << *order << ")\n";
        return exit_code::domain;
    }
    if (w.empty()) {
        out << "C-infinity (height 0)\n";
        return exit_code::ok;
    }
    const auto chain = derivative_chain(w);
    const auto p = classify(w);
    out << "C-infinity (height " << chain.height() << ", root " << chain.root().str() << ")\n";
    out << "left minimal: " << yes_no(p.left_minimal) << ", right minimal: " << yes_no(p.right_minimal)
        << "\nleft maximal: " << yes_no(p.left_maximal) << ", right maximal: " << yes_no(p.right_maximal)
        << "\nfully extendable: " << yes_no(p.fully_ext) << "\n";
    return exit_code::ok;
}

inline int cmd_psi(const CommandConfig& c, std::ostream& out) {
    const Word w = Word::parse(c.word);
    if (c.repr) {
        out << vertical_repr(w).str() << "\n";
    } else {
        out << psi(w).str() << "\n";
    }
    return exit_code::ok;
}

inline int cmd_unpsi(const CommandConfig& c, std::ostream& out) {
    out << reconstruct(Frontier::parse(c.left), Frontier::parse(c.right)).display() << "\n";
    return exit_code::ok;
}

inline int cmd_minimal(const CommandConfig& c, std::ostream& out) {
    out << canonical_minimal(Word::parse(c.word)).str() << "\n";
    return exit_code::ok;
}

inline int cmd_extend(const CommandConfig& c, std::ostream& out) {
    const Word w = Word::parse(c.word);
    if (w.empty()) throw RootOfEmpty();
    const Side side = c.side == "left" ? Side::Left : c.side == "right" ? Side::Right : Side::Both;
    out << extend(w, side).str() << "\n";
    return exit_code::ok;
}

inline int cmd_primitives(const CommandConfig& c, std::ostream& out) {
    const Word w = Word::parse(c.word);
    std::vector<Word> ps;
    if (c.min || c.max) {
        auto [a, b] = extremal_primitives(w, c.min ? Extremal::Min : Extremal::Max);
        ps = {a, b};
    } else {
        ps = primitives(w);
    }
    normalize(ps);
    for (const auto& p : ps) out << p.str() << "\n";
    return exit_code::ok;
}

inline int cmd_mf(const CommandConfig& c, std::ostream& out) {
    const auto cat = mf_set(c.k);
    if (c.format == "json") {
        json strata = json::object();
        for (const auto& [h, ws] : cat.by_height) strata[std::to_string(h)] = words_json(ws);
        out << json{{"schema", 1}, {"k", c.k}, {"count", cat.words.size()}, {"strata", strata}}.dump(2)
            << "\n";
        return exit_code::ok;
    }
    for (const auto& [h, ws] : cat.by_height) {
        out << "# height " << h << "\n";
        for (const auto& w : ws) out << w.str() << "\n";
    }
    return exit_code::ok;
}

inline json automaton_json(const Automaton& a) {
    json states = json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& s = a.state(i);
        json edges = json::array();
        for (Symbol x : {Symbol::One, Symbol::Two}) {
            if (const auto& e = s.on(x)) {
                edges.push_back({{"letter", std::string(1, to_char(x))},
                                 {"target", e->target},
                                 {"kind", to_string(e->kind)}});
            }
        }
        states.push_back({{"id", i}, {"label", s.label.str()}, {"edges", edges}});
    }
    return {{"schema", 1}, {"kind", "automaton"}, {"states", states}};
}

inline json compact_json(const CompactAutomaton& ca) {
    json states = json::array();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        const auto& s = ca.states[i];
        json edges = json::array();
        for (const auto& e : ca.edges[i]) {
            edges.push_back({{"target", e.target}, {"kind", to_string(e.kind)}, {"label", e.label.str()}});
        }
        states.push_back({{"id", i},
                          {"minimal_word", s.minimal_word.str()},
                          {"maximal_extension", s.maximal_extension.str()},
                          {"height", s.height},
                          {"root", s.root.str()},
                          {"truncated", s.truncated},
                          {"edges", edges}});
    }
    return {{"schema", 1}, {"kind", "compact"}, {"states", states}};
}

inline int cmd_automaton(const CommandConfig& c, std::ostream& out) {
    const Automaton a = automaton_for(c.k);
    if (!c.compact) {
        out << "A_" << c.k << ": " << a.size() << " states, " << a.edge_count(EdgeKind::Solid)
            << " solid edges, " << a.edge_count(EdgeKind::Weak) << " weak edges\n";
        if (!c.dot_path.empty()) emit_to(c.dot_path, out, [&](std::ostream& os) { write_dot(os, a); });
        if (!c.json_path.empty()) {
            emit_to(c.json_path, out, [&](std::ostream& os) { os << automaton_json(a).dump(2) << "\n"; });
        }
        return exit_code::ok;
    }
    const CompactAutomaton ca = compact(a);
    out << "CA_" << c.k << ": " << ca.size() << " states\n";
    std::size_t max_h = 0;
    for (const auto& s : ca.states) max_h = std::max(max_h, s.height);
    for (std::size_t h = 0; h <= max_h; ++h) out << "  height " << h << ": " << ca.count_height(h) << "\n";
    if (!c.dot_path.empty()) emit_to(c.dot_path, out, [&](std::ostream& os) { write_dot(os, ca); });
    if (!c.json_path.empty()) {
        emit_to(c.json_path, out, [&](std::ostream& os) { os << compact_json(ca).dump(2) << "\n"; });
    }
    return exit_code::ok;
}

inline int cmd_vuca(const CommandConfig& c, std::ostream& out) {
    VucaAutomaton a;
    std::optional<VerticalCompaction> vc;
    if (c.via_compaction || c.vca) {
        vc = vertical_compaction(c.k);
        a = vc->vuca;
    } else {
        a = build_vuca(c.k);
    }
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        out << (a.states[i].empty() ? "ε" : a.states[i].str());
        for (const auto& e : a.edges[i]) out << "  " << to_char(e.symbol) << "->" << e.target.str();
        out << "\n";
    }
    if (!c.dot_path.empty()) {
        emit_to(c.dot_path, out, [&](std::ostream& os) {
            if (c.vca) {
                write_vca_dot(os, *vc);
            } else {
                write_dot(os, a);
            }
        });
    }
    return exit_code::ok;
}

inline int cmd_gap(const CommandConfig& c, std::ostream& out) {
    const Word u = Word::parse(c.word);
    std::optional<std::size_t> budget = c.max_total;
    if (!budget) budget = env_max_total();
    const GapRecord r = shortest_gap(u, budget);
    if (c.json_out) {
        json j = gap_json(r);
        j["schema"] = 1;
        out << j.dump(2) << "\n";
        return exit_code::ok;
    }
    out << "u=" << r.u.str() << " z=" << r.z.display() << " gap=" << r.gap() << " total=" << r.total()
        << "\n"
        << r.repetition().str() << "\n";
    return exit_code::ok;
}

inline int cmd_gap_stats(const CommandConfig& c, std::ostream& out) {
    const BoundReport bound = bound_check(c.n);
    const RepetitivityTable table = repetitivity(c.n);
    if (c.json_out) {
        json rows = json::array();
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& r = table.rows[i];
            rows.push_back({{"n", r.n},
                            {"words", r.words},
                            {"I", r.min_gap},
                            {"G", r.max_gap},
                            {"I_witness", gap_json(r.min_witness)},
                            {"G_witness", gap_json(r.max_witness)},
                            {"max_total", r.max_total},
                            {"ratio", bound.rows[i].ratio}});
        }
        out << json{{"schema", 1},
                    {"n_max", c.n},
                    {"exponent", BoundReport::exponent},
                    {"fitted_constant", bound.fitted_constant},
                    {"rows", rows}}
                   .dump(2)
            << "\n";
        return exit_code::ok;
    }
    out << "n\twords\tI\tG\tmax|uzu|\tratio\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        std::ostringstream ratio;
        ratio.precision(6);
        ratio << bound.rows[i].ratio;
        out << r.n << "\t" << r.words << "\t" << r.min_gap << "\t" << r.max_gap << "\t" << r.max_total
            << "\t" << ratio.str() << "\n";
    }
    out << "fitted C (exponent " << BoundReport::exponent << "): " << bound.fitted_constant << "\n";
    return exit_code::ok;
}

inline int cmd_kolakoski(const CommandConfig& c, std::ostream& out) {
    out << kolakoski(c.n).str() << "\n";
    return exit_code::ok;
}

inline int cmd_census(const CommandConfig& c, std::ostream& out) {
    const CensusReport r = census(c.n);
    if (c.json_out) {
        json sq = json::object();
        for (const auto& [len, cnt] : r.squares_by_length) sq[std::to_string(len)] = cnt;
        out << json{{"schema", 1},
                    {"max_len", r.n_max},
                    {"words", r.words},
                    {"squares", r.squares},
                    {"squares_by_length", sq},
                    {"cubes", r.cubes},
                    {"overlaps", r.overlaps},
                    {"max_overlap_length", r.max_overlap_length},
                    {"overlaps_longer_than_55", r.overlaps_longer_than_55}}
                   .dump(2)
            << "\n";
        return exit_code::ok;
    }
    out << "words: " << r.words << "\nsquares: " << r.squares << "\n";
    for (const auto& [len, cnt] : r.squares_by_length) out << "  length " << len << ": " << cnt << "\n";
    out << "cubes: " << r.cubes << "\noverlaps: " << r.overlaps
        << "\nlongest overlap: " << r.max_overlap_length << "\n";
    return exit_code::ok;
}

inline int cmd_golden(const CommandConfig& c, std::ostream& out) {
    const auto outcomes = golden::run(golden::cases());
    bool all = true;
    for (const auto& o : outcomes) all = all && o.pass;
    if (c.json_out) {
        json results = json::object();
        for (const auto& o : outcomes) results[o.id] = o.pass;
        out << json{{"schema", 1}, {"all_pass", all}, {"results", results}}.dump(2) << "\n";
    } else {
        std::size_t passed = 0;
        for (const auto& o : outcomes) {
            if (o.pass) {
                ++passed;
                continue;
            }
            out << "FAIL " << o.id << (o.error.empty() ? "" : " (" + o.error + ")") << "\n";
        }
        out << passed << "/" << outcomes.size() << " examples pass\n";
    }
    return all ? exit_code::ok : exit_code::domain;
}

inline int cmd_oracle(const std::string& what, const CommandConfig& c, std::ostream& out) {
    if (what == "gaps") {
        const auto t = oracle::brute_gap_table(c.n);
        out << "n\twords\tI\tG\tmax|uzu|\n";
        for (const auto& r : t.rows) {
            out << r.n << "\t" << r.words << "\t" << r.min_gap << "\t" << r.max_gap << "\t" << r.max_total
                << "\n";
        }
        return exit_code::ok;
    }
    std::vector<Word> ws;
    if (what == "cinf") ws = oracle::enumerate_cinf(c.n);
    if (what == "ck") ws = oracle::enumerate_ck(c.k, c.n);
    if (what == "mf") ws = oracle::brute_mf(c.k);
    for (const auto& w : ws) out << w.display() << "\n";
    return exit_code::ok;
}

}  // namespace detail

/// Parses argv and runs one subcommand. Returns 0 on success, 1 on domain
/// errors, 2 on usage or parse errors.
inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Words over {1,2} closed under the run-length derivative", "cinf"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    CommandConfig c;

    auto word_arg = [&](CLI::App* sc) { sc->add_option("word", c.word, "Word over {1,2}")->required(); };

    auto* derive = app.add_subcommand("derive", "Derivative of a word");
    word_arg(derive);
    derive->add_flag("--all", c.all, "Print the whole derivative chain");

    auto* check = app.add_subcommand("check", "C-infinity membership, height, root and classification");
    word_arg(check);
    check->add_option("--k", c.k, "Check membership in C^k instead");

    auto* psi_cmd = app.add_subcommand("psi", "Left frontier of a word");
    word_arg(psi_cmd);
    psi_cmd->add_flag("--repr", c.repr, "Print the vertical representation U|V");

    auto* unpsi = app.add_subcommand("unpsi", "Word with vertical representation U|V");
    unpsi->add_option("U", c.left, "Left frontier")->required();
    unpsi->add_option("V", c.right, "Right frontier")->required();

    auto* minimal = app.add_subcommand("minimal", "Minimal word of which WORD is a simple extension");
    word_arg(minimal);

    auto* ext = app.add_subcommand("extend", "Maximal extension");
    word_arg(ext);
    ext->add_option("--side", c.side, "left, right or both")
        ->check(CLI::IsMember({"left", "right", "both"}))
        ->capture_default_str();

    auto* prims = app.add_subcommand("primitives", "Primitives of a word");
    word_arg(prims);
    auto* min_flag = prims->add_flag("--min", c.min, "Only the two shortest");
    prims->add_flag("--max", c.max, "Only the two longest")->excludes(min_flag);

    auto* mf = app.add_subcommand("mf", "Minimal forbidden words of C^k");
    mf->add_option("--k", c.k, "k >= 1")->required()->check(CLI::Range(1, 24));
    mf->add_option("--format", c.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* aut = app.add_subcommand("automaton", "Automaton recognizing C^k");
    aut->add_option("--k", c.k, "k >= 1")->required()->check(CLI::Range(1, 14));
    aut->add_flag("--compact", c.compact, "Compact the automaton");
    aut->add_option("--dot", c.dot_path, "Write Graphviz DOT to FILE ('-' for stdout)");
    aut->add_option("--json", c.json_path, "Write JSON to FILE ('-' for stdout)");

    auto* vuca = app.add_subcommand("vuca", "Vertical ultra-compacted automaton");
    vuca->add_option("--height", c.k, "Cut height K >= 1")->required()->check(CLI::Range(1, 16));
    vuca->add_option("--dot", c.dot_path, "Write Graphviz DOT to FILE ('-' for stdout)");
    vuca->add_flag("--via-compaction", c.via_compaction, "Derive it from the compacted automaton");
    vuca->add_flag("--vca", c.vca, "With --dot, export the intermediate relabeled automaton");

    auto* gap = app.add_subcommand("gap", "Shortest z with u z u in C-infinity");
    word_arg(gap);
    gap->add_option("--max-total", c.max_total, "Search budget on |uzu|");
    gap->add_flag("--json", c.json_out, "JSON output");

    auto* gap_stats = app.add_subcommand("gap-stats", "Repetitivity functions I(n) and G(n)");
    gap_stats->add_option("--n", c.n, "Largest length")->required()->check(CLI::Range(1, 16));
    gap_stats->add_flag("--json", c.json_out, "JSON output");

    auto* kola = app.add_subcommand("kolakoski", "Prefix of the Kolakoski word");
    kola->add_option("--len", c.n, "Prefix length")->required();

    auto* cen = app.add_subcommand("census", "Squares, cubes and overlaps among C-infinity words");
    cen->add_option("--max-len", c.n, "Largest length")->required()->check(CLI::Range(0, 160));
    cen->add_flag("--json", c.json_out, "JSON output");

    auto* golden_cmd = app.add_subcommand("paper-examples", "Check every golden example");
    golden_cmd->add_flag("--json", c.json_out, "JSON pass/fail map");

    auto* orc = app.add_subcommand("oracle", "Brute-force reference computations");
    orc->require_subcommand(1);
    auto* o_cinf = orc->add_subcommand("cinf", "C-infinity words of length <= N");
    o_cinf->add_option("--n", c.n)->required()->check(CLI::Range(0, 40));
    auto* o_ck = orc->add_subcommand("ck", "C^k words of length <= N");
    o_ck->add_option("--k", c.k)->required();
    o_ck->add_option("--n", c.n)->required()->check(CLI::Range(0, 20));
    auto* o_mf = orc->add_subcommand("mf", "Minimal forbidden words of C^k by scanning");
    o_mf->add_option("--k", c.k)->required()->check(CLI::Range(1, 4));
    auto* o_gaps = orc->add_subcommand("gaps", "I(n) and G(n) by exhaustive search");
    o_gaps->add_option("--n", c.n)->required()->check(CLI::Range(1, 12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    try {
        if (derive->parsed()) return detail::cmd_derive(c, out);
        if (check->parsed()) return detail::cmd_check(c, out);
        if (psi_cmd->parsed()) return detail::cmd_psi(c, out);
        if (unpsi->parsed()) return detail::cmd_unpsi(c, out);
        if (minimal->parsed()) return detail::cmd_minimal(c, out);
        if (ext->parsed()) return detail::cmd_extend(c, out);
        if (prims->parsed()) return detail::cmd_primitives(c, out);
        if (mf->parsed()) return detail::cmd_mf(c, out);
        if (aut->parsed()) return detail::cmd_automaton(c, out);
        if (vuca->parsed()) return detail::cmd_vuca(c, out);
        if (gap->parsed()) return detail::cmd_gap(c, out);
        if (gap_stats->parsed()) return detail::cmd_gap_stats(c, out);
        if (kola->parsed()) return detail::cmd_kolakoski(c, out);
        if (cen->parsed()) return detail::cmd_census(c, out);
        if (golden_cmd->parsed()) return detail::cmd_golden(c, out);
        if (o_cinf->parsed()) return detail::cmd_oracle("cinf", c, out);
        if (o_ck->parsed()) return detail::cmd_oracle("ck", c, out);
        if (o_mf->parsed()) return detail::cmd_oracle("mf", c, out);
        if (o_gaps->parsed()) return detail::cmd_oracle("gaps", c, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const NotCInfinity& e) {
        out << "not C-infinity (fails at level " << e.level() + 1 << ")\n";
        return exit_code::domain;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::domain;
    }
    err << "error: no subcommand\n";
    return exit_code::usage;
}

inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"cinf"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cinf::cli
