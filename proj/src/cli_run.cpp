#include "bbs/cli_run.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bbs/bbs_gens.hpp"
#include "bbs/groebner.hpp"
#include "bbs/linear.hpp"
#include "bbs/order_ideal.hpp"
#include "bbs/planar_weights.hpp"
#include "bbs/poly_io.hpp"
#include "bbs/separating.hpp"
#include "bbs/simplicial.hpp"

namespace bbs {

namespace {

using nlohmann::json;

struct SourceOptions {
    std::string file;
    std::string family;
    int n = 0, d = 0, a = 0, b = 0;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
    cmd->add_option("--order-ideal", src.file, "JSON file describing the order ideal");
    cmd->add_option("--family", src.family, "simplicial|box");
    cmd->add_option("--n", src.n, "ambient variables (simplicial)");
    cmd->add_option("--d", src.d, "degree bound (simplicial)");
    cmd->add_option("--a", src.a, "box width");
    cmd->add_option("--b", src.b, "box height");
}

OrderIdeal load_order_ideal(const SourceOptions& src) {
    json spec;
    if (!src.file.empty()) {
        std::ifstream in(src.file);
        if (!in) throw std::invalid_argument("cannot open order ideal file: " + src.file);
        in >> spec;
    } else if (!src.family.empty()) {
        spec["family"] = src.family;
        if (src.family == "simplicial") {
            spec["n"] = src.n;
            spec["d"] = src.d;
        } else if (src.family == "box") {
            spec["a"] = src.a;
            spec["b"] = src.b;
        }
    } else {
        throw std::invalid_argument("no order ideal given: use --order-ideal or --family");
    }
    if (spec.contains("family")) {
        std::string fam = spec["family"];
        if (fam == "simplicial") return simplicial_order_ideal(spec["n"], spec["d"]);
        if (fam == "box") return planar_box(spec["a"], spec["b"]);
        throw std::invalid_argument("unknown family: " + fam);
    }
    if (!spec.contains("n") || !spec.contains("terms"))
        throw std::invalid_argument("order ideal file needs fields n and terms");
    std::vector<std::vector<int>> exps = spec["terms"].get<std::vector<std::vector<int>>>();
    return build_order_ideal(spec["n"].get<int>(), exps);
}

json term_list(const OrderIdeal& o, const std::vector<Term>& ts) {
    json arr = json::array();
    for (auto& t : ts) arr.push_back(term_to_string(t, o.xvars));
    return arr;
}

json cnames(const OrderIdeal& o, const std::vector<int>& flats) {
    json arr = json::array();
    for (int v : flats) arr.push_back(o.cvars.name(v));
    return arr;
}

std::vector<int> parse_z_list(const OrderIdeal& o, const std::string& zlist) {
    std::vector<int> z;
    std::string cur;
    int depth = 0;
    for (char ch : zlist) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            if (!cur.empty()) z.push_back(o.cvars.index_of(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) z.push_back(o.cvars.index_of(cur));
    return z;
}

json reembedding_json(const OrderIdeal& o, const ReembeddingResult& r) {
    json jr;
    jr["Z"] = cnames(o, r.z);
    jr["Y"] = cnames(o, r.y);
    json imgs = json::object();
    for (auto& [v, h] : r.images) imgs[o.cvars.name(v)] = poly_to_string(h, o.cvars);
    jr["images"] = imgs;
    json res = json::array();
    for (auto& g : r.residual) res.push_back(poly_to_string(g, o.cvars));
    jr["residual"] = res;
    if (!r.weights.empty()) jr["W"] = r.weights;
    jr["optimal"] = r.optimal;
    jr["affine_cell"] = r.affine_cell;
    jr["certified"] = r.certified;
    jr["method"] = r.via;
    return jr;
}

SeparatingVerdict::Method parse_method(const std::string& m) {
    if (m == "linear") return SeparatingVerdict::Method::Linear;
    if (m == "groebner") return SeparatingVerdict::Method::Groebner;
    if (m == "lp") return SeparatingVerdict::Method::LP;
    throw std::invalid_argument("unknown method: " + m);
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::string& out) {
    CLI::App app{"border basis scheme re-embedding toolkit"};
    app.require_subcommand(1);

    SourceOptions src;
    std::string zlist, method = "linear";
    int tries = 500;
    unsigned long seed = 0;
    std::uint64_t budget = 0;
    bool optimal = false, exposed_only = false;
    int rep_n = 0, rep_d = 0;

    auto* c_borders = app.add_subcommand("borders", "order ideal, border, rim, interior");
    add_source_options(c_borders, src);
    auto* c_gens = app.add_subcommand("gens", "natural generators of the defining ideal");
    add_source_options(c_gens, src);
    auto* c_classes = app.add_subcommand("classes", "cotangent equivalence classes");
    add_source_options(c_classes, src);
    auto* c_ltgfan = app.add_subcommand("ltgfan", "leading term fan of the linear part");
    add_source_options(c_ltgfan, src);
    auto* c_checkz = app.add_subcommand("check-z", "check a candidate tuple");
    add_source_options(c_checkz, src);
    c_checkz->add_option("--z", zlist, "comma separated coefficient names")->required();
    c_checkz->add_option("--method", method, "linear|groebner|lp");
    c_checkz->add_option("--tries", tries, "attempts for the lp heuristic");
    c_checkz->add_option("--seed", seed, "random seed");
    c_checkz->add_option("--budget", budget, "basis computation step budget");
    auto* c_reembed = app.add_subcommand("reembed", "search separating re-embeddings");
    add_source_options(c_reembed, src);
    c_reembed->add_flag("--optimal", optimal, "only tuples of full linear-part size");
    c_reembed->add_flag("--exposed-only", exposed_only, "restrict choices to exposed coefficients");
    c_reembed->add_option("--method", method, "linear|groebner|lp");
    c_reembed->add_option("--tries", tries, "attempts for the lp heuristic");
    c_reembed->add_option("--seed", seed, "random seed");
    c_reembed->add_option("--budget", budget, "basis computation step budget");
    auto* c_weights = app.add_subcommand("planar-weights", "weight assignment and elimination");
    add_source_options(c_weights, src);
    auto* c_simp = app.add_subcommand("simplicial-report", "full report for degree-bounded ideals");
    c_simp->add_option("--n", rep_n, "ambient variables")->required();
    c_simp->add_option("--d", rep_d, "degree bound")->required();

    json j;
    try {
        std::vector<const char*> argv;
        argv.push_back("bbs");
        for (auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (c_borders->parsed()) {
            OrderIdeal o = load_order_ideal(src);
            j["n"] = o.n;
            j["mu"] = o.mu();
            j["nu"] = o.nu();
            j["terms"] = term_list(o, o.terms);
            j["border"] = term_list(o, o.border);
            std::vector<Term> rim, interior;
            for (int i = 0; i < o.mu(); ++i) (o.in_rim[i] ? rim : interior).push_back(o.terms[i]);
            j["rim"] = term_list(o, rim);
            j["interior"] = term_list(o, interior);
        } else if (c_gens->parsed()) {
            OrderIdeal o = load_order_ideal(src);
            j = json::array();
            for (auto& g : natural_generators(o)) {
                json jg;
                jg["source"] = g.label;
                jg["poly"] = poly_to_string(g.poly, o.cvars);
                jg["arrow_degree"] = g.arrow_degree;
                j.push_back(jg);
            }
        } else if (c_classes->parsed()) {
            OrderIdeal o = load_order_ideal(src);
            auto cls = cotangent_classes(natural_generators(o), o.cvars.size());
            j["trivial"] = cnames(o, cls.trivial);
            j["basic"] = cnames(o, cls.basic);
            json pr = json::array();
            for (auto& e : cls.proper) pr.push_back(cnames(o, e));
            j["proper"] = pr;
            j["lin_dim"] = cls.lin_dim();
        } else if (c_ltgfan->parsed()) {
            OrderIdeal o = load_order_ideal(src);
            auto cls = cotangent_classes(natural_generators(o), o.cvars.size());
            j = json::array();
            for (auto& z : ltgfan_via_classes(cls)) j.push_back(cnames(o, z));
        } else if (c_checkz->parsed()) {
            OrderIdeal o = load_order_ideal(src);
            std::vector<int> z = parse_z_list(o, zlist);
            Ideal gens = bbs_defining_ideal(o);
            auto m = parse_method(method);
            int exit_code = 0;
            if (m == SeparatingVerdict::Method::Linear) {
                auto v = check_z_linear(gens, z, o.cvars.size());
                j["status"] = v.found() ? "weights" : "no_weights";
                j["method"] = "linear";
                if (v.found()) {
                    j["W"] = v.weights;
                    json tri = json::array();
                    for (auto& [zv, f] : v.triangular) {
                        json e;
                        e["z"] = o.cvars.name(zv);
                        e["poly"] = poly_to_string(f, o.cvars);
                        tri.push_back(e);
                    }
                    j["tuple"] = tri;
                } else {
                    j["inconclusive"] = true;
                    exit_code = 2;
                }
            } else if (m == SeparatingVerdict::Method::Groebner) {
                std::optional<std::uint64_t> bud;
                if (budget > 0) bud = budget;
                bool sep = z_in_leading_terms(gens, z, o.cvars.size(), bud);
                j["status"] = sep ? "certified" : "not_separating";
                j["method"] = "groebner";
            } else {
                auto v = random_tuple_heuristic(gens, z, o.cvars.size(), tries, seed);
                j["method"] = "lp";
                if (v.found()) {
                    j["status"] = "weights";
                    j["W"] = v.weights;
                } else {
                    j["status"] = "no_weights";
                    j["inconclusive"] = true;
                    exit_code = 2;
                }
            }
            out = j.dump(2) + "\n";
            return exit_code;
        } else if (c_reembed->parsed()) {
            OrderIdeal o = load_order_ideal(src);
            CompEmbOptions opt;
            opt.optimal_only = optimal;
            opt.exposed_restricted = exposed_only;
            opt.method = parse_method(method);
            if (budget > 0) opt.budget = budget;
            opt.lp_tries = tries;
            opt.lp_seed = seed;
            auto res = comp_emb(o, opt);
            j["candidates"] = res.candidates;
            j["inconclusive"] = res.inconclusive;
            json rs = json::array();
            for (auto& r : res.results) rs.push_back(reembedding_json(o, r));
            j["results"] = rs;
        } else if (c_weights->parsed()) {
            OrderIdeal o = load_order_ideal(src);
            auto wa = assign_weights(o);
            auto elim = eliminate_nonexposed(o);
            auto gens = natural_generators(o);
            json w = json::object(), wit = json::object();
            for (int v = 0; v < o.cvars.size(); ++v) {
                w[o.cvars.name(v)] = wa.weights[v];
                if (wa.witness[v] >= 0) wit[o.cvars.name(v)] = gens[wa.witness[v]].label;
            }
            j["weights"] = w;
            j["witnesses"] = wit;
            j["eliminated"] = cnames(o, elim.z);
            json gb = json::array();
            for (auto& [zv, g] : elim.reduced_gb) gb.push_back(poly_to_string(g, o.cvars));
            j["reduced_gb"] = gb;
            json gens_bo = json::array();
            std::vector<char> nonexp(o.cvars.size(), 0);
            for (int v : elim.z) nonexp[v] = 1;
            for (int v = 0; v < o.cvars.size(); ++v)
                if (!nonexp[v]) gens_bo.push_back(o.cvars.name(v));
            j["generators_of_BO"] = gens_bo;
        } else if (c_simp->parsed()) {
            auto rep = simplicial_report(rep_n, rep_d);
            OrderIdeal o = simplicial_order_ideal(rep_n, rep_d);
            j["n"] = rep.n;
            j["d"] = rep.d;
            j["mu"] = rep.mu;
            j["nu"] = rep.nu;
            j["interior"] = rep.interior;
            j["rim"] = rep.rim;
            j["c_total"] = rep.c_total;
            j["c_interior"] = rep.c_interior;
            j["c_rim"] = rep.c_rim;
            j["lin_is_interior_span"] = rep.lin_is_interior_span;
            j["cot_dim"] = rep.cot_dim;
            j["principal_dim"] = rep.principal_dim;
            j["smooth"] = rep.smooth;
            json ws = json::array();
            for (auto& [v, g] : rep.witnesses) {
                json e;
                e["z"] = o.cvars.name(v);
                e["poly"] = poly_to_string(g, o.cvars);
                ws.push_back(e);
            }
            j["witnesses"] = ws;
            j["reembedding"] = reembedding_json(o, rep.reembedding);
        }
    } catch (const CLI::ParseError& e) {
        json err;
        err["error"] = e.what();
        out = err.dump(2) + "\n";
        return e.get_exit_code() == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        out = err.dump(2) + "\n";
        return 1;
    }
    out = j.dump(2) + "\n";
    return 0;
}

} // namespace bbs
