#include "mspec/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mspec/perron.hpp"
#include "mspec/render.hpp"

namespace mspec {

namespace {

struct Config {
    long max_depth = 16;
    long brute_box = 200;
    unsigned digits = 30;
    std::string output = "json";

    bool table() const { return output == "table"; }
};

void print_table(const Json& j, std::ostream& out, const std::string& prefix = "") {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            if (v.is_object())
                print_table(v, out, key);
            else
                out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    } else {
        out << j.dump() << "\n";
    }
}

void emit(const Json& j, const Config& cfg, std::ostream& out) {
    if (cfg.table())
        print_table(j, out);
    else
        out << j.dump(2) << "\n";
}

Json seq_json(const Seq& s) { return format_seq(s); }

Json lls_json(const LLSData& l) {
    Json j;
    j["sequence"] = format_seq(l.sequence);
    j["marked_index"] = (long)l.marked_index;
    return j;
}

void cmd_continuant(const std::string& literal, const Config& cfg, std::ostream& out) {
    Seq s = parse_seq_literal(literal);
    Json j;
    j["sequence"] = seq_json(s);
    j["K"] = dec(continuant(s));
    j["breve"] = dec(breve(s));
    j["trace_coefficient"] = dec(trace_coefficient(s));
    emit(j, cfg, out);
}

void cmd_diagram(const std::string& literal, const Config& cfg, std::ostream& out) {
    Seq s = parse_seq_literal(literal);
    Mat2 m = map_A(s);
    QuadForm f = map_C(s);
    RadicalRatio w = map_W(s);
    ExtremalityResult ex = is_extremal(s);
    Json j;
    j["sequence"] = seq_json(s);
    j["matrix"] = json_of(m);
    j["form"] = json_of(f);
    j["spectrum"] = json_of(w, cfg.digits);
    j["extremal"] = ex.extremal;
    j["minimum"] = dec(ex.minimum);
    Json mins = Json::array();
    for (auto& p : ex.minimizers) mins.push_back(json_of(p));
    j["minimizers"] = mins;
    emit(j, cfg, out);
}

void node_common(Json& j, const FareyCode& code) {
    j["code"] = json_of(code);
    j["coordinate"] = rat_str(code.coordinate());
}

void cmd_tree(const std::string& kind, const std::string& mu_lit, const std::string& nu_lit,
              long depth, const Config& cfg, std::ostream& out) {
    if (depth < 0 || depth > cfg.max_depth)
        throw resource_limit_error("tree: depth outside configured limit");
    auto line = [&](Json j) {
        if (cfg.table())
            print_table(j, out);
        else
            out << j.dump() << "\n";
    };
    auto payload_lines = [&](auto&& nodes, auto&& pay) {
        for (auto& n : nodes) {
            Json j;
            node_common(j, n.code);
            j["left"] = pay(n.left);
            j["middle"] = pay(n.middle);
            j["right"] = pay(n.right);
            line(std::move(j));
        }
    };
    if (kind == "farey") {
        payload_lines(enumerate_triples(farey_root(), farey_sigma(), depth),
                      [](const Rat& r) { return Json(rat_str(r)); });
        return;
    }
    if (kind == "markov") {
        payload_lines(classical_tree(depth), [](const Int& v) { return Json(dec(v)); });
        return;
    }
    if (mu_lit.empty() || nu_lit.empty())
        throw std::invalid_argument("tree: --mu and --nu are required for this kind");
    Seq mu = parse_seq_literal(mu_lit), nu = parse_seq_literal(nu_lit);
    if (kind == "seq") {
        payload_lines(enumerate_triples(seq_root(mu, nu), seq_sigma(), depth),
                      [](const Seq& s) { return Json(format_seq(s)); });
    } else if (kind == "matrix") {
        payload_lines(enumerate_triples(matrix_root(map_A(mu), map_A(nu)), matrix_sigma(), depth),
                      [](const Mat2& m) { return json_of(m); });
    } else if (kind == "genmarkov") {
        payload_lines(enumerate_gen_markov(mu, nu, depth), [](const GenMarkovEntry& e) {
            Json j;
            j["seq"] = format_seq(e.seq);
            j["breve"] = dec(e.num);
            return j;
        });
    } else {
        throw std::invalid_argument("tree: unknown kind '" + kind + "'");
    }
}

void cmd_collisions(const std::string& mu_lit, const std::string& nu_lit, long depth,
                    bool key_outer, const Config& cfg, std::ostream& out) {
    Seq mu = parse_seq_literal(mu_lit), nu = parse_seq_literal(nu_lit);
    auto groups = collision_search(mu, nu, depth, key_outer);
    Json j;
    j["mu"] = format_seq(mu);
    j["nu"] = format_seq(nu);
    j["depth"] = depth;
    j["value_cap"] = dec(collision_value_cap(mu, nu, depth));
    Json gs = Json::array();
    for (auto& g : groups) {
        Json gj;
        gj["value"] = dec(g.value);
        Json entries = Json::array();
        for (auto& code : g.codes) {
            Json e;
            node_common(e, code);
            Seq mid = middle_sequence_of_code(mu, nu, code);
            e["sequence"] = format_seq(mid);
            e["form"] = json_of(map_C(mid));
            entries.push_back(std::move(e));
        }
        gj["entries"] = std::move(entries);
        gs.push_back(std::move(gj));
    }
    j["groups"] = std::move(gs);
    emit(j, cfg, out);
}

void cmd_classical(const std::string& triple, const Config& cfg, std::ostream& out) {
    std::vector<Int> v;
    std::size_t pos = 0;
    while (pos <= triple.size()) {
        std::size_t comma = triple.find(',', pos);
        std::string part = triple.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (part.empty()) throw std::invalid_argument("classical: bad triple literal");
        v.emplace_back(part);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (v.size() != 3) throw std::invalid_argument("classical: need a,M,b");
    MarkovTriple t(v[0], v[1], v[2]);
    MarkovFormData d = compute_uv(t);
    Seq period = map_Q(t);
    Json j;
    j["a"] = dec(t.a);
    j["M"] = dec(t.M);
    j["b"] = dec(t.b);
    j["u"] = dec(d.u);
    j["v"] = dec(d.v);
    j["period"] = format_seq(period);
    j["form_S"] = json_of(map_S(t));
    j["form_markov"] = json_of(markov_theorem_form(t.M, t.b, t.a));
    j["Y"] = json_of(map_Y(t), cfg.digits);
    emit(j, cfg, out);
}

void cmd_perron(const std::string& literal, long mark, const Config& cfg, std::ostream& out) {
    Seq s = parse_seq_literal(literal);
    if (mark < 0 || (std::size_t)mark >= s.size())
        throw std::domain_error("perron: mark out of range");
    MarkedPeriodicLLS m(s, (std::size_t)mark);
    PerronExtremum e = perron_extremum(m);
    Json j;
    j["period"] = seq_json(s);
    j["mark"] = mark;
    j["value"] = json_of(e.value, cfg.digits);
    j["argmax"] = (long)e.argmax;
    if (s.size() % 2 == 0) {
        switch (perron_matches_spectrum(s)) {
            case PerronSpectrumStatus::matches: j["spectrum_match"] = "matches"; break;
            case PerronSpectrumStatus::differs: j["spectrum_match"] = "differs"; break;
            case PerronSpectrumStatus::not_extremal: j["spectrum_match"] = "not_extremal"; break;
        }
        // sqrt(disc)/max E_i against the brute-force minimum of |f|
        QuadForm f = map_C(s);
        auto [sq, sf] = squarefree_split(f.discriminant());
        Surd quotient = Surd(0, sq, sf, 1) / e.value;
        BruteMin bm = markov_minimum_bruteforce(f, cfg.brute_box);
        j["brute_minimum"] = dec(bm.value);
        j["jp_consistent"] =
            quotient.is_rational() && quotient.r() == 1 && quotient.p() == bm.value;
    } else {
        j["spectrum_match"] = "n/a";
    }
    emit(j, cfg, out);
}

void cmd_sail(const std::string& literal, Int bound, const std::string& svg_path,
              const Config& cfg, std::ostream& out) {
    Seq s = parse_seq_literal(literal);
    Cone c = cone_of_sequence(s);
    Mat2 m = map_A(s);
    Surd alo = c.low.sign() < 0 ? -c.low : c.low;
    Int margin = std::max(alo.floor(), c.high.floor()) + 2;
    if (bound == 0) bound = (2 * m.a + 2) * margin + margin;  // about two periods
    SailPolyline full = sail_of_cone(c, bound);
    SailPolyline p = trim_guaranteed(full, c.low, c.high, bound);
    Json j;
    j["sequence"] = seq_json(s);
    j["high"] = json_of(c.high, cfg.digits);
    j["low"] = json_of(c.low, cfg.digits);
    j["bound"] = dec(bound);
    Json vs = Json::array();
    for (auto& v : p.vertices) vs.push_back(json_of(v));
    j["vertices"] = vs;
    j["lls"] = lls_json(lls_from_sail(p));
    if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        if (!f) throw std::invalid_argument("sail: cannot open svg path");
        f << sail_svg(p, c);
        j["svg"] = svg_path;
    }
    emit(j, cfg, out);
}

void cmd_verify_graph(const std::string& mu_lit, const std::string& nu_lit, long depth,
                      const Config& cfg, std::ostream& out) {
    Seq mu = parse_seq_literal(mu_lit), nu = parse_seq_literal(nu_lit);
    GraphReport r = verify_markov_llsgraph(mu, nu, depth);
    Json j;
    j["mu"] = format_seq(mu);
    j["nu"] = format_seq(nu);
    j["depth"] = r.depth;
    j["evenly_prime"] = r.evenly_prime;
    j["order_forward"] = r.order_forward;
    j["order_reversed"] = r.order_reversed;
    j["extremal_mu"] = r.extremal_mu;
    j["extremal_nu"] = r.extremal_nu;
    j["evenly_palindromic"] = r.evenly_palindromic;
    j["almost_markov"] = r.almost_markov();
    j["markov"] = r.markov();
    emit(j, cfg, out);
}

void cmd_reconstruct(const std::string& target_lit, const std::string& mu_lit,
                     const std::string& nu_lit, long max_depth, const Config& cfg,
                     std::ostream& out) {
    Seq target = parse_seq_literal(target_lit);
    Seq mu = parse_seq_literal(mu_lit), nu = parse_seq_literal(nu_lit);
    auto r = reconstruct_from_middle(target, mu, nu, max_depth);
    Json j;
    j["target"] = format_seq(target);
    j["found"] = r.has_value();
    if (r) {
        node_common(j, r->code);
        j["left"] = format_seq(r->left);
        j["middle"] = format_seq(r->middle);
        j["right"] = format_seq(r->right);
    }
    emit(j, cfg, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"exact computations around the Markov spectrum"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--output", cfg.output, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--max-depth", cfg.max_depth, "tree depth limit");
    app.add_option("--digits", cfg.digits, "decimal digits in output");
    app.add_option("--brute-box", cfg.brute_box, "brute-force search box");

    std::string literal, kind, mu, nu, triple, svg_path, target;
    long depth = -1, mark = 0;
    Int bound = 0;
    std::string bound_str = "0";
    bool key_outer = false;

    auto* c_cont = app.add_subcommand("continuant", "K, breve and trace coefficient");
    c_cont->add_option("sequence", literal)->required();

    auto* c_diag = app.add_subcommand("diagram", "matrix, form, spectrum value, extremality");
    c_diag->add_option("sequence", literal)->required();

    auto* c_tree = app.add_subcommand("tree", "triple-graph enumeration (JSON lines)");
    c_tree->add_option("kind", kind, "farey|markov|seq|matrix|genmarkov")->required();
    c_tree->add_option("--mu", mu);
    c_tree->add_option("--nu", nu);
    c_tree->add_option("--depth", depth)->required();

    auto* c_coll = app.add_subcommand("collisions", "equal middle values in a generalised tree");
    c_coll->add_option("--mu", mu)->required();
    c_coll->add_option("--nu", nu)->required();
    c_coll->add_option("--depth", depth)->required();
    c_coll->add_flag("--key-outer", key_outer, "also key on outer triple entries");

    auto* c_class = app.add_subcommand("classical", "classical maps of a Markov triple");
    c_class->add_option("--triple", triple, "a,M,b")->required();

    auto* c_perron = app.add_subcommand("perron", "exact Perron expression over one period");
    c_perron->add_option("sequence", literal)->required();
    c_perron->add_option("--mark", mark);

    auto* c_sail = app.add_subcommand("sail", "sail vertices and LLS data of the cone");
    c_sail->add_option("sequence", literal)->required();
    c_sail->add_option("--bound", bound_str, "x bound of the scan (default: two periods)");
    c_sail->add_option("--svg", svg_path, "write an SVG rendering");

    auto* c_verify = app.add_subcommand("verify-graph", "Markov LLS triple-graph conditions");
    c_verify->add_option("--mu", mu)->required();
    c_verify->add_option("--nu", nu)->required();
    c_verify->add_option("--depth", depth)->required();

    auto* c_rec = app.add_subcommand("reconstruct", "find the node with the given middle");
    c_rec->add_option("target", target)->required();
    c_rec->add_option("--mu", mu)->required();
    c_rec->add_option("--nu", nu)->required();
    c_rec->add_option("--max-depth", depth);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_cont) cmd_continuant(literal, cfg, out);
        else if (*c_diag) cmd_diagram(literal, cfg, out);
        else if (*c_tree) cmd_tree(kind, mu, nu, depth, cfg, out);
        else if (*c_coll) cmd_collisions(mu, nu, depth, key_outer, cfg, out);
        else if (*c_class) cmd_classical(triple, cfg, out);
        else if (*c_perron) cmd_perron(literal, mark, cfg, out);
        else if (*c_sail) {
            bound = Int(bound_str);
            cmd_sail(literal, bound, svg_path, cfg, out);
        } else if (*c_verify) cmd_verify_graph(mu, nu, depth, cfg, out);
        else if (*c_rec) cmd_reconstruct(target, mu, nu, depth < 0 ? cfg.max_depth : depth, cfg, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace mspec
