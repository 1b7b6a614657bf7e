#include <chrono>
#include <cstdio>
#include <ctime>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/capacity.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/families.hpp"
#include "rainbow/flow.hpp"
#include "rainbow/hierarchy.hpp"
#include "rainbow/isoperimetric.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/protocol.hpp"
#include "rainbow/rational.hpp"

namespace {

using nlohmann::json;
using namespace rainbow;

constexpr const char* version_string = "1.0.0";

class FlagUsage : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!text.empty() && text.back() == ',') out.push_back("");
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    for (const std::string& tok : split_commas(text)) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw FlagUsage(flag + ": '" + tok + "' is not an integer");
        }
    }
    if (out.empty()) throw FlagUsage(flag + ": empty list");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
    std::vector<Rational> out;
    for (const std::string& tok : split_commas(text)) {
        try {
            out.push_back(parse_rational(tok));
        } catch (const std::exception&) {
            throw FlagUsage(flag + ": '" + tok + "' is not a rational");
        }
    }
    if (out.empty()) throw FlagUsage(flag + ": empty list");
    return out;
}

VertexSet set_from_list(const Graph& g, const std::vector<int>& ids) {
    return VertexSet::from_vertices(g.vertex_count(), ids);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_meta(const std::string& command, bool enabled) {
    if (!enabled) return;
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&tt));
    std::cerr << "{\"command\":\"" << command << "\",\"version\":\"" << version_string
              << "\",\"timestamp\":\"" << buf << "\"}\n";
}

Family family_from_name(const std::string& name) {
    if (name == "complete") return Family::complete;
    if (name == "star") return Family::star;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "grid") return Family::grid;
    if (name == "hierarchy") return Family::hierarchy;
    throw FlagUsage("unknown family: " + name);
}

int run_gen(const std::string& family, const std::string& params, const std::string& alpha,
            const std::string& out) {
    Family fam = family_from_name(family);
    std::vector<int> p = parse_int_list(params, "--params");
    FamilySpec spec;
    spec.family = fam;
    if (fam == Family::hierarchy) {
        if (p.size() != 2) throw FlagUsage("hierarchy --params is \"base_n,levels\"");
        spec.base = complete_graph(p[0]);
        spec.levels = p[1];
        if (alpha.empty()) {
            spec.alpha.assign(static_cast<std::size_t>(p[1]), Rational(1));
        } else {
            std::vector<Rational> a = parse_rational_list(alpha, "--alpha");
            if (static_cast<int>(a.size()) == p[1]) {
                spec.alpha = a;
            } else if (a.size() == 1) {
                // single value = geometric ratio, weight alpha^(i-1) on level i
                Rational cur = 1;
                for (int i = 0; i < p[1]; ++i) {
                    spec.alpha.push_back(cur);
                    cur *= a[0];
                }
            } else {
                throw FlagUsage("--alpha needs 1 or `levels` entries");
            }
        }
    } else {
        if (!alpha.empty()) throw FlagUsage("--alpha only applies to hierarchy");
        spec.dims = p;
    }
    save_graph(generate(spec), out);
    return 0;
}

int run_rainbow(const std::string& file, const std::string& method, bool no_prune, int max_n) {
    Graph g = load_graph(file);
    if (method == "spectral") {
        auto [lo, hi] = spectral_bounds(g);
        RainbowReport rep;
        rep.method = "spectral-only";
        rep.spectral_lower = lo;
        rep.spectral_upper = hi;
        emit(report_to_json(rep));
        return 0;
    }
    ExactOptions opt;
    opt.prune_connected = !no_prune;
    opt.max_n = max_n;
    emit(report_to_json(rainbow_time_exact(g, opt)));
    return 0;
}

int run_urainbow(const std::string& file, int root, bool no_prune, int max_n) {
    Graph g = load_graph(file);
    ExactOptions opt;
    opt.prune_connected = !no_prune;
    opt.max_n = max_n;
    emit(report_to_json(unrestricted_rainbow_time(g, root, opt)));
    return 0;
}

int run_capacity(const std::string& file, const std::string& set_list,
                 const std::string& model_str, std::optional<long> rounds,
                 std::optional<double> time) {
    CapacityModel model = parse_model(model_str);
    if (model == CapacityModel::hamiltonian) {
        if (!time || rounds) throw FlagUsage("hamiltonian model takes --time, not --rounds");
    } else {
        if (!rounds || time) throw FlagUsage(model_str + " model takes --rounds, not --time");
    }
    Graph g = load_graph(file);
    CapacityQuery q{g, set_from_list(g, parse_int_list(set_list, "--set")), model,
                    rounds.value_or(0), time.value_or(0.0)};
    json out;
    out["model"] = model_name(model);
    out["boundary"] = to_string(boundary_weight(g, q.f));
    switch (model) {
        case CapacityModel::bell:
            out["capacity"] = to_string(capacity_bell(q));
            out["duration"] = *rounds;
            break;
        case CapacityModel::unitary:
            out["capacity"] = to_string(capacity_unitary(q));
            out["duration"] = *rounds;
            break;
        case CapacityModel::hamiltonian:
            out["capacity"] = capacity_hamiltonian(q);
            out["duration"] = *time;
            break;
    }
    emit(out);
    return 0;
}

int run_protocol_cmd(const std::string& file, const std::string& f_list,
                     const std::string& k_list, bool verify) {
    Graph g = load_graph(file);
    VertexSet f = set_from_list(g, parse_int_list(f_list, "--f"));
    VertexSet k = k_list.empty() ? default_k(g, f)
                                 : set_from_list(g, parse_int_list(k_list, "--k"));
    ProtocolTrace trace = run_protocol(g, f, k);
    json out = trace_to_json(trace);
    if (verify) {
        RainbowReport rep = rainbow_time_exact(g);
        VerificationReport v = verify_trace(g, f, k, trace, *rep.tau);
        out["verification"] = verification_to_json(v, *rep.tau);
    }
    emit(out);
    return 0;
}

int run_hier_eval(int base_n, int levels, const std::string& alpha_str,
                  std::optional<int> compare_d) {
    Rational alpha = parse_rational(alpha_str);
    HierarchyEval eval;
    if (base_n >= 2 && base_n % 2 == 0 && levels >= 2) {
        eval = kn_hierarchy_rainbow_time(base_n, levels, alpha);
    } else {
        // odd bases and single-level towers go through the general form
        std::vector<Rational> alphas;
        Rational cur = 1;
        for (int i = 0; i < levels; ++i) {
            alphas.push_back(cur);
            cur *= alpha;
        }
        eval = hierarchy_rainbow_time(tau_complete(base_n), u_complete(base_n), base_n,
                                      levels, alphas);
        eval.stats = hierarchy_stats(complete_graph(base_n), levels, alphas);
    }
    json out = hierarchy_eval_to_json(eval);
    if (compare_d) out["comparison"] = comparison_to_json(
        compare_to_grid(base_n, alpha, levels, *compare_d));
    emit(out);
    return 0;
}

int run_table(const std::string& families_list, const std::string& sizes_list) {
    std::vector<std::string> fams;
    for (const std::string& f : split_commas(families_list)) {
        if (f != "complete" && f != "star" && f != "path" && f != "cycle" && f != "grid")
            throw FlagUsage("table family must be complete|star|path|cycle|grid, got " + f);
        fams.push_back(f);
    }
    if (fams.empty()) throw FlagUsage("--families: empty list");
    std::vector<int> sizes = parse_int_list(sizes_list, "--sizes");

    std::string csv = "name,N,tau,total_weight,max_degree\n";
    for (const std::string& fam : fams) {
        for (int n : sizes) {
            FamilySpec spec;
            std::string name;
            if (fam == "grid") {
                int side = 1;
                while (side * side < n) ++side;
                if (side * side != n)
                    throw FlagUsage("grid sizes must be perfect squares, got " +
                                    std::to_string(n));
                spec.family = Family::grid;
                spec.dims = {side, side};
                name = "grid_" + std::to_string(side) + "x" + std::to_string(side);
            } else {
                spec.family = family_from_name(fam);
                spec.dims = {n};
                char letter = fam == "complete" ? 'K'
                              : fam == "star"   ? 'S'
                              : fam == "path"   ? 'P'
                                                : 'C';
                name = std::string(1, letter) + "_" + std::to_string(n);
            }
            Graph g = generate(spec);
            RainbowReport rep = rainbow_time_exact(g);
            GraphStats st = graph_stats(g);
            csv += name + "," + std::to_string(n) + "," + to_string(*rep.tau) + "," +
                   to_string(st.total_edge_weight) + "," + to_string(st.max_degree) + "\n";
        }
    }
    std::cout << csv;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow-time and entanglement-capacity toolkit"};
    app.require_subcommand(1);
    bool meta = false;
    app.add_flag("--meta", meta, "print command/version/timestamp metadata to stderr");

    std::string gen_family, gen_params, gen_alpha, gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a family graph as JSON");
    gen->add_option("--family", gen_family, "complete|star|path|cycle|grid|hierarchy")
        ->required();
    gen->add_option("--params", gen_params,
                    "size, grid dims, or \"base_n,levels\" for hierarchy (comma separated)")
        ->required();
    gen->add_option("--alpha", gen_alpha,
                    "hierarchy level weights, or one geometric ratio");
    gen->add_option("--out", gen_out, "output file")->required();

    std::string rb_file, rb_method = "both";
    bool rb_no_prune = false;
    int rb_max_n = 24;
    CLI::App* rb = app.add_subcommand("rainbow", "rainbow time of a graph file");
    rb->add_option("file", rb_file, "graph JSON file")->required();
    rb->add_option("--method", rb_method, "exact|spectral|both (default both)")
        ->check(CLI::IsMember({"exact", "spectral", "both"}));
    rb->add_flag("--no-prune", rb_no_prune, "enumerate without connectivity pruning");
    rb->add_option("--max-n", rb_max_n, "enumeration size cap (default 24)");

    std::string urb_file;
    int urb_root = 0;
    bool urb_no_prune = false;
    int urb_max_n = 24;
    CLI::App* urb = app.add_subcommand("urainbow", "unrestricted rainbow time");
    urb->add_option("file", urb_file, "graph JSON file")->required();
    urb->add_option("--root", urb_root, "root vertex excluded from F")->required();
    urb->add_flag("--no-prune", urb_no_prune, "enumerate without connectivity pruning");
    urb->add_option("--max-n", urb_max_n, "enumeration size cap (default 24)");

    std::string cap_file, cap_set, cap_model;
    std::optional<long> cap_rounds;
    std::optional<double> cap_time;
    CLI::App* cap = app.add_subcommand("capacity", "entanglement capacity across a cut");
    cap->add_option("file", cap_file, "graph JSON file")->required();
    cap->add_option("--set", cap_set, "comma list of F vertex ids")->required();
    cap->add_option("--model", cap_model, "bell|unitary|hamiltonian")
        ->required()
        ->check(CLI::IsMember({"bell", "unitary", "hamiltonian"}));
    cap->add_option("--rounds", cap_rounds, "round count (bell/unitary)");
    cap->add_option("--time", cap_time, "evolution time (hamiltonian)");

    std::string pr_file, pr_f, pr_k;
    bool pr_verify = false;
    CLI::App* pr = app.add_subcommand("protocol", "multi-round Bell distribution protocol");
    pr->add_option("file", pr_file, "graph JSON file")->required();
    pr->add_option("--f", pr_f, "comma list of F vertex ids")->required();
    pr->add_option("--k", pr_k, "comma list of K vertex ids (default: lowest ids outside F)");
    pr->add_flag("--verify", pr_verify, "verify the trace against the rainbow-time bounds");

    int he_n = 0, he_k = 0;
    std::string he_alpha = "1";
    std::optional<int> he_grid;
    CLI::App* he = app.add_subcommand("hier-eval", "closed-form hierarchy rainbow time");
    he->add_option("--base-n", he_n, "complete base size")->required();
    he->add_option("--levels", he_k, "hierarchy levels")->required();
    he->add_option("--alpha", he_alpha, "geometric weight ratio (rational)");
    he->add_option("--compare-grid", he_grid, "compare against a d-dimensional grid");

    std::string tb_families, tb_sizes;
    CLI::App* tb = app.add_subcommand("table", "CSV of tau and stats per family/size");
    tb->add_option("--families", tb_families, "comma list: complete,star,path,cycle,grid")
        ->required();
    tb->add_option("--sizes", tb_sizes, "comma list of vertex counts")->required();

    // lets global flags like --meta appear after the subcommand
    for (CLI::App* sub : {gen, rb, urb, cap, pr, he, tb}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    std::function<int()> body;
    std::string command;
    if (app.got_subcommand(gen)) {
        command = "gen";
        body = [&] { return run_gen(gen_family, gen_params, gen_alpha, gen_out); };
    } else if (app.got_subcommand(rb)) {
        command = "rainbow";
        body = [&] { return run_rainbow(rb_file, rb_method, rb_no_prune, rb_max_n); };
    } else if (app.got_subcommand(urb)) {
        command = "urainbow";
        body = [&] { return run_urainbow(urb_file, urb_root, urb_no_prune, urb_max_n); };
    } else if (app.got_subcommand(cap)) {
        command = "capacity";
        body = [&] { return run_capacity(cap_file, cap_set, cap_model, cap_rounds, cap_time); };
    } else if (app.got_subcommand(pr)) {
        command = "protocol";
        body = [&] { return run_protocol_cmd(pr_file, pr_f, pr_k, pr_verify); };
    } else if (app.got_subcommand(he)) {
        command = "hier-eval";
        body = [&] { return run_hier_eval(he_n, he_k, he_alpha, he_grid); };
    } else if (app.got_subcommand(tb)) {
        command = "table";
        body = [&] { return run_table(tb_families, tb_sizes); };
    } else {
        std::cerr << "no subcommand given\n";
        return 1;
    }

    try {
        int rc = body();
        emit_meta(command, meta);
        return rc;
    } catch (const FlagUsage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        emit(json{{"error", e.what()}});
        emit_meta(command, meta);
        return 2;
    }
}
