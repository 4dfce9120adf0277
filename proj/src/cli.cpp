#include "ehh/cli.hpp"

#include "ehh/domtree.hpp"
#include "ehh/errors.hpp"
#include "ehh/extractor.hpp"
#include "ehh/generators.hpp"
#include "ehh/graph_io.hpp"
#include "ehh/oracle.hpp"
#include "ehh/pipeline.hpp"
#include "ehh/report.hpp"
#include "ehh/splitter.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ehh {

namespace {

struct Options {
    std::string input = "-";
    std::string output;
    std::string format = "edgelist";
    int k = 5;
    std::string eps;
    std::uint64_t seed = 1;
    int root = -1;
    bool json = false;

    // gen
    std::string family = "split";
    int n = 100;
    std::string p = "1/2";
    std::string density = "1/2";
    int branching = 3;
    int interval_length = 4;

    // split-tree, probe, extract-pair, verify, bench
    std::string weights;
    int max_nodes = 8;
    std::string path;
    std::string cert;
    std::string families = "split,cograph";
    std::string sizes = "250,500,1000";
    int seeds = 1;
};

std::string slurp(const std::string& name, std::istream& in)
{
    std::ostringstream buf;
    if (name == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(name);
        if (!f)
            throw ParameterError("cannot open '" + name + "'");
        buf << f.rdbuf();
    }
    return buf.str();
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

int to_int(const std::string& s)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw ParameterError("expected an integer, got '" + s + "'");
}

class Command {
public:
    Command(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
        : o_(o)
        , in_(in)
        , err_(err)
    {
        if (!o_.output.empty()) {
            file_.open(o_.output);
            if (!file_)
                throw ParameterError("cannot write '" + o_.output + "'");
            sink_ = &file_;
        } else {
            sink_ = &out;
        }
    }

    std::ostream& out() { return *sink_; }
    std::ostream& err() { return err_; }

    Graph graph() { return parse_graph(slurp(o_.input, in_), parse_format(o_.format)); }

    Rational eps() const { return o_.eps.empty() ? default_eps(o_.k) : Rational::parse(o_.eps); }

    void emit(const Json& j) { out() << j.dump(2) << '\n'; }

    int gen()
    {
        InstanceSpec spec;
        spec.family = parse_family(o_.family);
        spec.n = o_.n;
        spec.seed = o_.seed;
        spec.p = Rational::parse(o_.p);
        spec.density = Rational::parse(o_.density);
        spec.branching = o_.branching;
        spec.interval_length = o_.interval_length;
        Graph g = gen_instance(spec);
        if (o_.json) {
            Json edges = Json::array();
            for (auto [u, v] : g.edges())
                edges.push_back({u, v});
            emit(Json{{"family", to_string(spec.family)}, {"n", g.order()}, {"seed", spec.seed},
                {"rng", std::string(Rng::algorithm)}, {"edges", edges}});
        } else {
            out() << emit_graph(g, parse_format(o_.format));
        }
        return kExitOk;
    }

    int check_class()
    {
        Graph g = graph();
        HoleSearch hole = find_long_hole(g, o_.k);
        HoleSearch anti = find_long_antihole(g, o_.k);
        auto p4 = find_p4(g);
        auto status = [](SearchStatus s) {
            return s == SearchStatus::found ? "found" : s == SearchStatus::none ? "none" : "unknown";
        };
        Json j;
        j["n"] = g.order();
        j["k"] = o_.k;
        j["hole_status"] = status(hole.status);
        j["hole"] = hole.witness ? to_json(*hole.witness) : Json(nullptr);
        j["antihole_status"] = status(anti.status);
        j["antihole"] = anti.witness ? to_json(*anti.witness) : Json(nullptr);
        j["p4"] = p4 ? Json(p4->path) : Json(nullptr);
        emit(j);
        return hole.witness || anti.witness ? kExitPrecondition : kExitOk;
    }

    int domtree()
    {
        Graph g = graph();
        int root = o_.root >= 0 ? o_.root : 0;
        DomTree t = DomTree::build(g, root);
        Json j = to_json(t);
        Json roots = Json::array();
        for (int r : vertex_roots(g, t))
            roots.push_back(r);
        j["vertex_roots"] = roots;
        emit(j);
        return kExitOk;
    }

    int split_tree()
    {
        Graph g = graph();
        const int n = g.order();
        if (n == 0 || g.edge_count() != static_cast<std::size_t>(n - 1) || !is_connected(g))
            throw PreconditionError("split-tree input must be a tree");
        int root = o_.root >= 0 ? o_.root : 0;
        if (root >= n)
            throw OutOfRangeError("root outside the tree");
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        parent[static_cast<std::size_t>(root)] = root;
        std::vector<int> queue{root};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int c : g.neighbors(queue[i]))
                if (parent[static_cast<std::size_t>(c)] < 0) {
                    parent[static_cast<std::size_t>(c)] = queue[i];
                    queue.push_back(c);
                }
        std::vector<std::int64_t> w(static_cast<std::size_t>(n), 1);
        if (!o_.weights.empty()) {
            std::istringstream ws(slurp(o_.weights, in_));
            for (auto& x : w)
                if (!(ws >> x))
                    throw ParameterError("weights file needs one integer per vertex");
        }
        WeightedTree wt(std::move(parent), std::move(w));
        TreeSplit s = split(wt);
        Json j = to_json(s);
        j["root"] = root;
        emit(j);
        return kExitOk;
    }

    int probe()
    {
        auto rows = probe_split_constant(o_.max_nodes);
        if (o_.json) {
            Json arr = Json::array();
            for (const auto& r : rows)
                arr.push_back(Json{{"nodes", r.nodes}, {"shapes", r.shapes}, {"min_optimum", r.min_optimum.str()},
                    {"median_optimum", r.median_optimum.str()}});
            emit(arr);
        } else {
            out() << "nodes,shapes,min_optimum,min_optimum_decimal,median_optimum\n";
            for (const auto& r : rows)
                out() << r.nodes << ',' << r.shapes << ',' << r.min_optimum.str() << ',' << std::fixed
                      << std::setprecision(6) << r.min_optimum.to_double() << ',' << r.median_optimum.str() << '\n';
        }
        return kExitOk;
    }

    int extract_pair()
    {
        Graph g = graph();
        BipartitePair pair;
        if (!o_.path.empty()) {
            std::vector<int> path;
            for (const auto& s : split_list(o_.path))
                path.push_back(to_int(s));
            pair = extract_empty_pair(g, path, o_.k, eps());
        } else {
            pair = strong_pair(g, o_.k, eps());
        }
        if (!verify_pair(g, pair).ok)
            throw VerificationFailure("extract-pair", "pair does not verify");
        Json j = to_json(pair, g.order());
        j["verified"] = true;
        emit(j);
        return kExitOk;
    }

    int extract_ehs()
    {
        Graph g = graph();
        EHCertificate c = eh_extract(g, o_.k, eps());
        Json j = to_json(c);
        j["verified"] = verify_clique_or_stable(g, c);
        emit(j);
        return kExitOk;
    }

    int verify()
    {
        Graph g = graph();
        if (o_.cert.empty())
            throw ParameterError("verify needs --cert");
        Json cj;
        try {
            cj = Json::parse(slurp(o_.cert, in_));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParameterError(std::string("certificate is not valid JSON: ") + e.what());
        }
        ParsedCertificate pc = parse_certificate(cj, g.order());
        Json j;
        bool ok = false;
        switch (pc.type) {
        case CertificateType::hole:
            ok = is_valid_hole(g, pc.hole);
            j["type"] = to_string(pc.hole.kind);
            break;
        case CertificateType::pair: {
            PairCheck chk = verify_pair(g, pc.pair);
            ok = chk.ok;
            j["type"] = to_string(pc.pair.kind) + "_pair";
            if (!ok)
                j["reason"] = chk.reason;
            if (chk.violation)
                j["violation"] = {chk.violation->first, chk.violation->second};
            break;
        }
        case CertificateType::clique_stable:
            ok = verify_clique_or_stable(g, pc.kind, VertexSet(pc.vertices, g.order()));
            j["type"] = to_string(pc.kind);
            break;
        }
        j["valid"] = ok;
        emit(j);
        return ok ? kExitOk : kExitPrecondition;
    }

    int bench()
    {
        Json runs = Json::array();
        if (!o_.json)
            out() << "family,n,seed,k,eps,pair_kind,min_side,c_achieved,cert_kind,cert_size,exponent,ms\n";
        const Rational e = eps();
        for (const auto& fam : split_list(o_.families)) {
            for (const auto& size : split_list(o_.sizes)) {
                for (int s = 0; s < o_.seeds; ++s) {
                    InstanceSpec spec;
                    spec.family = parse_family(fam);
                    spec.n = to_int(size);
                    spec.seed = o_.seed + static_cast<std::uint64_t>(s);
                    Graph g = gen_instance(spec);
                    auto t0 = std::chrono::steady_clock::now();
                    BipartitePair pair = strong_pair(g, o_.k, e);
                    EHCertificate cert = eh_extract(g, o_.k, e);
                    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                    const bool pair_ok = verify_pair(g, pair).ok;
                    const bool cert_ok = verify_clique_or_stable(g, cert);
                    if (!pair_ok || !cert_ok)
                        throw VerificationFailure("bench", "certificate failed verification");
                    const double c = static_cast<double>(pair.min_side()) / g.order();
                    const double expo = g.order() > 1 ? std::log(cert.size()) / std::log(g.order()) : 0.0;
                    if (o_.json) {
                        runs.push_back(Json{{"spec", {{"family", fam}, {"n", spec.n}, {"seed", spec.seed},
                                                         {"rng", std::string(Rng::algorithm)}}},
                            {"k", o_.k}, {"eps", e.str()}, {"pair", to_json(pair, g.order())},
                            {"certificate", to_json(cert)}, {"verified", pair_ok && cert_ok}, {"exponent", expo},
                            {"ms", ms}});
                    } else {
                        out() << fam << ',' << spec.n << ',' << spec.seed << ',' << o_.k << ',' << e.str() << ','
                              << to_string(pair.kind) << ',' << pair.min_side() << ',' << std::fixed
                              << std::setprecision(6) << c << ',' << to_string(cert.kind) << ',' << cert.size()
                              << ',' << expo << ',' << std::setprecision(1) << ms << '\n';
                    }
                }
            }
        }
        if (o_.json)
            emit(runs);
        return kExitOk;
    }

private:
    const Options& o_;
    std::istream& in_;
    std::ostream& err_;
    std::ofstream file_;
    std::ostream* sink_ = nullptr;
};

} // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Certified clique / stable set extraction for graphs without long holes or anti-holes", "ehh"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool takes_graph) {
        if (takes_graph) {
            sub->add_option("input", o.input, "graph file, '-' for stdin");
            sub->add_option("--format", o.format, "edgelist | dimacs");
        }
        sub->add_option("--output", o.output, "write machine output here instead of stdout");
        sub->add_option("--k", o.k, "forbidden hole / anti-hole length");
        sub->add_option("--eps", o.eps, "sparsity coefficient a/b (default 1/(8(k+2)))");
        sub->add_option("--seed", o.seed, "generator seed");
        sub->add_option("--root", o.root, "tree root");
        sub->add_flag("--json", o.json, "JSON instead of text/CSV where both exist");
    };

    auto* gen = app.add_subcommand("gen", "generate an instance");
    common(gen, false);
    gen->add_option("--format", o.format, "edgelist | dimacs");
    gen->add_option("--family", o.family, "split | cograph | chordal_interval | gnp | weighted_tree");
    gen->add_option("--n", o.n, "vertex count");
    gen->add_option("--p", o.p, "gnp edge probability a/b");
    gen->add_option("--density", o.density, "split cross-edge probability a/b");
    gen->add_option("--branching", o.branching, "cograph parts per node / tree parent window");
    gen->add_option("--length", o.interval_length, "max interval length");

    auto* check = app.add_subcommand("check-class", "search long holes, long anti-holes and a P4");
    common(check, true);
    auto* dom = app.add_subcommand("domtree", "dominating tree as JSON");
    common(dom, true);
    auto* st = app.add_subcommand("split-tree", "split a weighted tree");
    common(st, true);
    st->add_option("--weights", o.weights, "file with one integer weight per vertex");
    auto* probe = app.add_subcommand("probe-split-constant", "exhaustive split optimum over small trees (CSV)");
    common(probe, false);
    probe->add_option("--max-nodes", o.max_nodes, "largest tree size (<= 10)");
    auto* ep = app.add_subcommand("extract-pair", "empty or complete pair (JSON)");
    common(ep, true);
    ep->add_option("--path", o.path, "comma-separated dominating induced path; omitted: full pipeline");
    auto* ehs = app.add_subcommand("extract-ehs", "clique or stable set certificate (JSON)");
    common(ehs, true);
    auto* ver = app.add_subcommand("verify", "re-check a certificate against a graph");
    common(ver, true);
    ver->add_option("--cert", o.cert, "certificate JSON file");
    auto* bench = app.add_subcommand("bench", "run the pipeline over generated corpora (CSV)");
    common(bench, false);
    bench->add_option("--family", o.families, "comma-separated families");
    bench->add_option("--sizes", o.sizes, "comma-separated sizes");
    bench->add_option("--seeds", o.seeds, "seeds per size, starting at --seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Command cmd(o, in, out, err);
        if (*gen)
            return cmd.gen();
        if (*check)
            return cmd.check_class();
        if (*dom)
            return cmd.domtree();
        if (*st)
            return cmd.split_tree();
        if (*probe)
            return cmd.probe();
        if (*ep)
            return cmd.extract_pair();
        if (*ehs)
            return cmd.extract_ehs();
        if (*ver)
            return cmd.verify();
        if (*bench)
            return cmd.bench();
    } catch (const LongHoleFound& e) {
        Json j{{"error", "long_hole_found"}, {"witness", to_json(e.witness())}};
        out << j.dump(2) << '\n';
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace ehh
