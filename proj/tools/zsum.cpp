// Command-line front end: zsum <subcommand> [options]

#include "zsum/constructions.hpp"
#include "zsum/error.hpp"
#include "zsum/modp.hpp"
#include "zsum/search.hpp"
#include "zsum/sweeps.hpp"
#include "zsum/theorems.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace zsum;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kInternal = 3 };

struct RunConfig {
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0;
    int workers = 0;
    int depth = -1;
    bool symmetry = false;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string data = ZSUM_DATA_DIR "/known_values.txt";
    std::string out;

    SearchConfig search() const {
        SearchConfig c;
        if (budget_nodes) c.node_budget = budget_nodes;
        if (budget_seconds > 0) c.time_budget = budget_seconds;
        c.workers = workers;
        c.parallel_depth = depth >= 0 ? depth : (workers > 1 ? 3 : 0);
        c.symmetry_reduction = symmetry;
        return c;
    }
};

struct Output {
    json j;
    std::string csv;  // empty: not tabular
    std::string text;
};

void emit(const RunConfig& rc, const Output& o) {
    std::string body;
    if (rc.format == "json") {
        body = o.j.dump(2) + "\n";
    } else if (rc.format == "csv") {
        if (o.csv.empty()) throw Error(ErrorKind::InvalidInput, "csv output is only available for tables");
        body = o.csv;
    } else {
        body = o.text.empty() ? o.j.dump(2) + "\n" : o.text;
    }
    if (rc.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(rc.out);
        if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + rc.out);
        f << body;
    }
}

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json opt_bool(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad integer list: " + s);
        }
    }
    return out;
}

json search_json(const Group& g, const LengthSet& l, const SearchResult& r) {
    json j;
    j["group"] = g.to_string();
    j["L"] = l.to_string();
    switch (r.kind) {
    case ValueKind::Finite: j["value"] = r.value; break;
    case ValueKind::Infinite: j["value"] = "infinite"; break;
    case ValueKind::Unknown: j["value"] = nullptr; break;
    }
    j["witness"] = r.witness ? json(r.witness->to_text()) : json(nullptr);
    j["nodes"] = r.stats.nodes;
    j["seconds"] = r.stats.seconds;
    j["complete"] = r.complete();
    return j;
}

// ---- invariant

struct InvariantArgs {
    std::string group;
    int leq = 0, exactly = 0;
    bool davenport = false, eta = false, egz = false;
    std::string list;
};

int cmd_invariant(const InvariantArgs& a, const RunConfig& rc) {
    const auto g = Group::parse(a.group);
    const int chosen = (a.leq > 0) + (a.exactly > 0) + a.davenport + a.eta + a.egz + !a.list.empty();
    if (chosen != 1) throw Error(ErrorKind::InvalidInput, "pick exactly one of --leq, --exactly, --davenport, --eta, --egz, --L");
    LengthSet l = LengthSet::all_positive();
    if (a.leq > 0) l = LengthSet::interval(a.leq);
    if (a.exactly > 0) l = LengthSet::singleton(a.exactly);
    if (a.eta) l = LengthSet::interval(g.exponent());
    if (a.egz) l = LengthSet::singleton(g.exponent());
    if (!a.list.empty()) {
        const auto v = split_ints(a.list);
        l = LengthSet::explicit_set({v.begin(), v.end()});
    }
    const auto r = s_L(g, l, rc.search());
    Output o;
    o.j = search_json(g, l, r);
    std::ostringstream t;
    t << "s_" << l.to_string() << "(" << g.to_string() << ") = ";
    if (r.kind == ValueKind::Finite) t << r.value;
    else if (r.kind == ValueKind::Infinite) t << "infinite";
    else t << "unknown";
    t << "  [" << r.stats.nodes << " nodes, " << r.stats.seconds << " s]\n";
    if (r.witness) t << "witness: " << r.witness->to_text() << "\n";
    o.text = t.str();
    emit(rc, o);
    return r.complete() ? kOk : kBudget;
}

// ---- construct / verify

struct ConstructArgs {
    std::string family;
    std::vector<std::string> params;
    std::string xs;
    int x = 1;
};

int need_int(const std::vector<std::string>& v, std::size_t i, const char* what) {
    if (i >= v.size()) throw Error(ErrorKind::InvalidInput, std::string("missing ") + what);
    try {
        return std::stoi(v[i]);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, std::string("bad ") + what + ": " + v[i]);
    }
}

int cmd_construct(const ConstructArgs& a, const RunConfig& rc) {
    Sequence s;
    json params;
    std::size_t expected = 0;
    int min_zs = 0;
    if (a.family == "lowercnr") {
        LowerCnrParams p{need_int(a.params, 0, "n"), need_int(a.params, 1, "r"), need_int(a.params, 2, "k")};
        s = build_lowercnr(p);
        params = {{"n", p.n}, {"r", p.r}, {"k", p.k}};
        expected = (std::size_t{1} << (p.r - 1)) * static_cast<std::size_t>(p.n - 1) + static_cast<std::size_t>(p.k);
        min_zs = 2 * p.n - p.k;
    } else if (a.family == "general") {
        if (a.params.empty()) throw Error(ErrorKind::InvalidInput, "missing group");
        LowerGeneralParams p{Group::parse(a.params[0]), need_int(a.params, 1, "k")};
        s = build_lower_general(p);
        params = {{"group", p.group.to_string()}, {"k", p.k}, {"x", lower_general_x(p)}};
        expected = static_cast<std::size_t>(p.group.d_star() + p.k - 1);
        min_zs = p.group.d_star() - p.k + 1;
    } else if (a.family == "inv2") {
        const int n = need_int(a.params, 0, "n");
        const int k = need_int(a.params, 1, "k");
        Inv2Params p;
        if (!a.xs.empty()) p.xs = split_ints(a.xs);
        p.x = a.x;
        s = build_inv2(n, k, p);
        params = {{"n", n}, {"k", k}};
        expected = static_cast<std::size_t>(2 * n - 2 + k);
        min_zs = 2 * n - 1 - k + 1;
    } else {
        throw Error(ErrorKind::InvalidInput, "unknown family '" + a.family + "' (lowercnr, general, inv2)");
    }
    const auto rep = verify_construction(s, expected, min_zs);
    Output o;
    o.j["family"] = a.family;
    o.j["params"] = params;
    o.j["group"] = s.group().to_string();
    o.j["sequence"] = s.to_text();
    o.j["length"] = s.length();
    o.j["min_zero_sum"] = opt_int(rep.min_zero_sum);
    o.j["required_min"] = rep.required_min;
    o.j["pass"] = rep.pass();
    o.text = s.to_text() + "\n";
    emit(rc, o);
    return kOk;
}

struct VerifyArgs {
    std::string group;
    std::string sequence;
    int min_zs = 0;
    int len = -1;
    int inverse_k = -1;
};

int cmd_verify(const VerifyArgs& a, const RunConfig& rc) {
    const auto g = Group::parse(a.group);
    const auto s = Sequence::parse(g, a.sequence);
    Output o;
    o.j["group"] = g.to_string();
    o.j["sequence"] = s.to_text();
    o.j["length"] = s.length();
    const auto m = min_zero_sum_length(s);
    o.j["min_zero_sum"] = opt_int(m);
    bool pass = true;
    if (a.min_zs > 0 || a.len >= 0) {
        const auto rep = verify_construction(s, a.len >= 0 ? static_cast<std::size_t>(a.len) : s.length(), a.min_zs);
        o.j["length_ok"] = rep.length_ok;
        o.j["min_ok"] = rep.min_ok;
        pass = rep.pass();
    }
    if (a.inverse_k >= 0) {
        if (!g.is_homocyclic() || g.rank() != 2)
            throw Error(ErrorKind::InvalidInput, "--inverse needs a group C_n^2");
        const bool match = match_inverse_structure(s, g.exponent(), a.inverse_k);
        o.j["inverse_match"] = match;
        pass = pass && match;
    }
    o.j["pass"] = pass;
    o.text = std::string(pass ? "pass" : "fail") + "\n";
    emit(rc, o);
    return kOk;
}

// ---- criteria

struct CriteriaArgs {
    long long p = 0, t_len = 0, k = 0, d = 0;
    std::string group, sequence;
};

int cmd_criteria(const CriteriaArgs& a, const RunConfig& rc) {
    CriterionReport r;
    if (!a.sequence.empty()) {
        const auto g = Group::parse(a.group);
        const int p = g.p_group_prime();
        r = zerosub_guarantee(Sequence::parse(g, a.sequence), a.k, static_cast<std::uint64_t>(p),
                              a.d > 0 ? a.d : davenport_value(g, rc.search()).value);
    } else {
        r = criterion_report(a.p, a.t_len, a.k, a.d);
    }
    Output o;
    o.j["p"] = r.p;
    o.j["T_len"] = r.t_len;
    o.j["k"] = r.k;
    o.j["D"] = r.d_g;
    json arr = json::array();
    for (const auto& [i, res] : r.a_values) arr.push_back({i, res});
    o.j["a"] = arr;
    o.j["i0"] = opt_int(r.i0);
    o.j["guarantees_short"] = r.guarantees_short;
    o.j["flags"] = {{"l4_7", r.l4_7}, {"c4_8", r.c4_8}, {"l4_9", r.l4_9}};
    emit(rc, o);
    return kOk;
}

// ---- theorems

struct TheoremArgs {
    std::string which;
    std::vector<std::string> params;
    int t = 1, p = 3, d = 2;
    int trials = 0;
    bool verify = false;
};

json claim_json(const TheoremClaim& c) {
    json j;
    j["theorem"] = c.theorem;
    j["group"] = c.group.to_string();
    j["k"] = c.k;
    j["leq"] = c.leq;
    j["D"] = c.d;
    j["D_source"] = to_string(c.d_source);
    json h = json::object();
    for (const auto& [name, v] : c.hypotheses) h[name] = v;
    j["hypotheses"] = h;
    j["bound"] = opt_int(c.bound);
    j["equality"] = c.equality;
    j["verifiable_at_desk"] = c.verifiable_at_desk;
    return j;
}

int cmd_theorems(const TheoremArgs& a, const RunConfig& rc) {
    Output o;
    if (a.which == "lemma3.6") {
        if (a.params.empty()) throw Error(ErrorKind::InvalidInput, "missing group");
        const auto rep = lemma_3_6_property(Group::parse(a.params[0]), a.trials, rc.seed, rc.search());
        o.j["name"] = rep.name;
        o.j["checked"] = rep.checked;
        o.j["violations"] = rep.violations;
        o.j["exhaustive"] = rep.exhaustive;
        o.j["first_violation"] = rep.first_violation ? json(rep.first_violation->to_text()) : json(nullptr);
        emit(rc, o);
        return kOk;
    }
    TheoremClaim c;
    if (a.which == "1.8") {
        if (a.params.empty()) throw Error(ErrorKind::InvalidInput, "missing group");
        c = check_thm_1_8(Group::parse(a.params[0]), rc.search());
    } else if (a.which == "1.9") {
        if (a.params.empty()) throw Error(ErrorKind::InvalidInput, "missing group");
        c = check_thm_1_9(Group::parse(a.params[0]), need_int(a.params, 1, "k"));
    } else if (a.which == "1.10") {
        if (a.params.empty()) throw Error(ErrorKind::InvalidInput, "missing case (i, ii, iii)");
        Thm110Params p;
        const auto& cs = a.params[0];
        if (cs == "i") p.which = Thm110Params::Case::I;
        else if (cs == "ii") p.which = Thm110Params::Case::II;
        else if (cs == "iii") p.which = Thm110Params::Case::III;
        else throw Error(ErrorKind::InvalidInput, "case must be i, ii or iii");
        p.t = a.t;
        p.p = a.p;
        p.d = a.d;
        c = check_thm_1_10(p);
    } else {
        throw Error(ErrorKind::InvalidInput, "unknown theorem '" + a.which + "' (1.8, 1.9, 1.10, lemma3.6)");
    }
    o.j = claim_json(c);
    int code = kOk;
    if (a.verify) {
        if (!c.bound) throw Error(ErrorKind::InvalidInput, "no claim to verify: a hypothesis fails");
        const auto v = verify_claim(c, rc.search());
        o.j["search"] = search_json(c.group, LengthSet::interval(c.leq), v.result);
        o.j["holds"] = v.result.complete() ? json(v.holds) : json(nullptr);
        o.j["equality_observed"] = v.result.complete() ? json(v.equality) : json(nullptr);
        if (!v.result.complete()) code = kBudget;
    }
    emit(rc, o);
    return code;
}

// ---- conjectures

struct ConjectureArgs {
    std::string group;
    std::string source = "bundled";
    bool kexp = false;
};

int cmd_conjectures(const ConjectureArgs& a, const RunConfig& rc) {
    const auto g = Group::parse(a.group);
    ConjectureReport rep;
    if (a.source == "computed") rep = conjecture_harness_computed(g, rc.search(), a.kexp);
    else if (a.source == "bundled") rep = conjecture_harness_bundled(g, load_known_values(rc.data));
    else throw Error(ErrorKind::InvalidInput, "--source must be computed or bundled");

    Output o;
    o.j["group"] = g.to_string();
    o.j["D"] = rep.d;
    o.j["source"] = rep.source;
    json rows = json::array();
    std::ostringstream csv, txt;
    csv << "j,leq,value,bound,holds,source\n";
    txt << g.to_string() << "  D = " << rep.d << "  (" << rep.source << ")\n";
    txt << "  j  D-j  s_<=D-j  D+j  holds\n";
    bool any_unknown = false;
    for (const auto& r : rep.rows) {
        rows.push_back({{"j", r.j}, {"leq", r.leq}, {"value", opt_int(r.value)}, {"bound", r.bound},
                        {"holds", opt_bool(r.holds)}, {"source", r.source}});
        csv << r.j << ',' << r.leq << ',' << (r.value ? std::to_string(*r.value) : "") << ',' << r.bound << ','
            << (r.holds ? (*r.holds ? "true" : "false") : "") << ',' << r.source << '\n';
        txt << "  " << r.j << "  " << r.leq << "  " << (r.value ? std::to_string(*r.value) : "?") << "  " << r.bound
            << "  " << (r.holds ? (*r.holds ? "yes" : "no") : "?") << '\n';
        any_unknown = any_unknown || !r.value;
    }
    o.j["rows"] = rows;
    o.j["k_G"] = opt_int(rep.k_g);
    o.j["k_G_is_half"] = rep.k_g_is_half;
    o.j["monotone"] = rep.monotone;
    json kx = json::array();
    for (const auto& r : rep.kexp_rows) {
        if (!r.value && a.source == "computed" && !a.kexp) continue;
        kx.push_back({{"k", r.k}, {"kexp", r.kexp}, {"value", opt_int(r.value)}, {"bound", r.bound},
                      {"upper_side", r.upper_side}, {"on_conjectured_side", opt_bool(r.on_conjectured_side)},
                      {"source", r.source}});
    }
    o.j["kexp_rows"] = kx;
    txt << "k_G = " << (rep.k_g ? std::to_string(*rep.k_g) : "unknown")
        << (rep.k_g_is_half ? "  (= (D+1)/2)" : "") << '\n';
    o.csv = csv.str();
    o.text = txt.str();
    emit(rc, o);
    return a.source == "computed" && any_unknown ? kBudget : kOk;
}

// ---- sweep

struct SweepArgs {
    std::string primes = "3,5,7";
    int max_t = 400;
    int count = 500;
    int row_count = 200;
};

int cmd_sweep(const SweepArgs& a, const RunConfig& rc) {
    auto summary = sweep_i0(split_ints(a.primes), a.max_t);
    summary.lines.push_back(sweep_row_transform(a.row_count, rc.seed));
    for (const char* name : {"C2^3", "C3^2", "C3^3"}) {
        summary.lines.push_back(sweep_congruence(Group::parse(name), a.count, rc.seed));
    }
    for (const char* name : {"C2^3", "C3^2"}) {
        summary.lines.push_back(sweep_zerosub(Group::parse(name), a.count, rc.seed));
    }
    Output o;
    json lines = json::array();
    std::ostringstream csv, txt;
    csv << "name,checked,violations,informational\n";
    for (const auto& l : summary.lines) {
        lines.push_back({{"name", l.name}, {"checked", l.checked}, {"violations", l.violations},
                         {"informational", l.informational}});
        csv << l.name << ',' << l.checked << ',' << l.violations << ',' << (l.informational ? "true" : "false")
            << '\n';
        txt << (l.informational ? "INFO " : (l.violations == 0 ? "PASS " : "FAIL ")) << l.name << "  checked "
            << l.checked << "  violations " << l.violations << '\n';
    }
    o.j["primes"] = split_ints(a.primes);
    o.j["max_T"] = a.max_t;
    o.j["seed"] = rc.seed;
    o.j["lines"] = lines;
    o.j["pass"] = summary.pass();
    txt << (summary.pass() ? "all properties pass\n" : "violations found\n");
    o.csv = csv.str();
    o.text = txt.str();
    emit(rc, o);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-sum invariants of finite abelian groups"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig rc;
    app.add_option("--budget-nodes", rc.budget_nodes, "Search node budget");
    app.add_option("--budget-seconds", rc.budget_seconds, "Search time budget");
    app.add_option("--workers", rc.workers, "OpenMP threads for the search");
    app.add_option("--depth", rc.depth, "Prefix depth for parallel partitioning");
    app.add_flag("--symmetry", rc.symmetry, "Orbit reduction for homocyclic groups");
    app.add_option("--seed", rc.seed, "Seed for randomized suites");
    app.add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--data", rc.data, "Bundled values file");
    app.add_option("--out", rc.out, "Write the report here");

    InvariantArgs ia;
    auto* inv = app.add_subcommand("invariant", "Compute s_L(G)");
    inv->add_option("group", ia.group)->required();
    inv->add_option("--leq", ia.leq, "L = [1, K]");
    inv->add_option("--exactly", ia.exactly, "L = {M}");
    inv->add_flag("--davenport", ia.davenport, "D(G)");
    inv->add_flag("--eta", ia.eta, "eta(G)");
    inv->add_flag("--egz", ia.egz, "s(G)");
    inv->add_option("--L", ia.list, "Explicit set a,b,c");

    ConstructArgs ca;
    auto* con = app.add_subcommand("construct", "Build an extremal sequence");
    con->add_option("family", ca.family, "lowercnr n r k | general GROUP k | inv2 n k")->required();
    con->add_option("params", ca.params);
    con->add_option("--xs", ca.xs, "inv2, k in {0,1}: x_1..x_n");
    con->add_option("--x", ca.x, "inv2, k = n-1");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Check length and shortest zero-sum subsequence");
    ver->add_option("group", va.group)->required();
    ver->add_option("sequence", va.sequence)->required();
    ver->add_option("--min-zs", va.min_zs, "Every zero-sum subsequence has at least this length");
    ver->add_option("--len", va.len, "Expected length");
    ver->add_option("--inverse", va.inverse_k, "Match the C_n^2 inverse families for this k");

    CriteriaArgs cra;
    auto* cri = app.add_subcommand("criteria", "a_i residues and i0 for a zero-sum T");
    cri->add_option("--p", cra.p);
    cri->add_option("--T", cra.t_len, "|T|");
    cri->add_option("--k", cra.k)->required();
    cri->add_option("--D", cra.d);
    cri->add_option("--group", cra.group);
    cri->add_option("--sequence", cra.sequence, "Zero-sum T over --group");

    TheoremArgs ta;
    auto* thm = app.add_subcommand("theorems", "Hypothesis checks and claimed bounds");
    thm->add_option("which", ta.which, "1.8 GROUP | 1.9 GROUP k | 1.10 i|ii|iii | lemma3.6 GROUP")->required();
    thm->add_option("params", ta.params);
    thm->add_option("--t", ta.t);
    thm->add_option("--p", ta.p);
    thm->add_option("--d", ta.d);
    thm->add_option("--trials", ta.trials, "lemma3.6: 0 = exhaustive when small");
    thm->add_flag("--verify", ta.verify, "Run the search behind the claim");

    ConjectureArgs cja;
    auto* cj = app.add_subcommand("conjectures", "k_G table");
    cj->add_option("group", cja.group)->required();
    cj->add_option("--source", cja.source)->check(CLI::IsMember({"computed", "bundled"}));
    cj->add_flag("--kexp", cja.kexp, "Also compute s_{k exp}(G)");

    SweepArgs sa;
    auto* sw = app.add_subcommand("sweep", "Parameter sweeps and seeded property suites");
    sw->add_option("--p", sa.primes, "Primes, comma separated");
    sw->add_option("--max-T", sa.max_t);
    sw->add_option("--count", sa.count, "Sequences per group for the seeded suites");
    sw->add_option("--rows", sa.row_count, "Row transform tuples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*inv) return cmd_invariant(ia, rc);
        if (*con) return cmd_construct(ca, rc);
        if (*ver) return cmd_verify(va, rc);
        if (*cri) return cmd_criteria(cra, rc);
        if (*thm) return cmd_theorems(ta, rc);
        if (*cj) return cmd_conjectures(cja, rc);
        if (*sw) return cmd_sweep(sa, rc);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return e.kind() == ErrorKind::ResourceLimit ? kBudget : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
