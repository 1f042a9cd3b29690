#include "g2micro/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "g2micro/acceptance.hpp"
#include "g2micro/euler.hpp"
#include "g2micro/fixtures.hpp"
#include "g2micro/packets.hpp"
#include "g2micro/pipeline.hpp"
#include "g2micro/translation.hpp"

namespace g2micro::cli {

namespace {

using json = nlohmann::ordered_json;
using orbitgeom::GroupType;

struct Options {
    std::string pair = "g2";
    std::string format;
    std::string fixtures = "./data";
    std::string euler_case = "integral";
    std::string lambda;
    std::string singular_mode = "subregular";
    int bound = 4;
};

orbitgeom::SymmetricPair parse_pair(const std::string& name) {
    auto p = orbitgeom::pair_from_name(name);
    if (!p) throw CLI::ValidationError("--pair", "unknown pair '" + name + "'");
    return *p;
}

bool is_integral_pair(const orbitgeom::SymmetricPair& p) {
    return p.group == GroupType::G2 && p.k == GroupType::SL2xSL2;
}

json matrix_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

void emit_orbits(const Options& opt, std::ostream& out) {
    auto os = orbitgeom::orbit_table(parse_pair(opt.pair), opt.fixtures);
    std::string format = opt.format.empty() ? "tsv" : opt.format;
    if (format == "tsv") {
        out << "id\tp\tdim\tnature_a1\tnature_a2\tclosed\topen\n";
        for (const auto& rec : os.orbits)
            out << rec.id << "\t" << rec.p.compact() << "\t" << rec.dim << "\t"
                << orbitgeom::nature_token(rec.nature[0]) << "\t"
                << orbitgeom::nature_token(rec.nature[1]) << "\t" << rec.closed << "\t" << rec.open
                << "\n";
    } else if (format == "json") {
        json doc;
        doc["schema"] = 1;
        doc["pair"] = orbitgeom::pair_name(os.pair);
        doc["orbits"] = json::array();
        for (const auto& rec : os.orbits)
            doc["orbits"].push_back({{"id", rec.id},
                                     {"p", rec.p.compact()},
                                     {"dim", rec.dim},
                                     {"nature", {orbitgeom::nature_token(rec.nature[0]),
                                                 orbitgeom::nature_token(rec.nature[1])}},
                                     {"closed", rec.closed},
                                     {"open", rec.open}});
        out << doc.dump(2) << "\n";
    } else {
        throw CLI::ValidationError("--format", "orbits supports tsv or json");
    }
}

void emit_hasse(const Options& opt, std::ostream& out) {
    auto os = orbitgeom::orbit_table(parse_pair(opt.pair), opt.fixtures);
    auto poset = orbitgeom::bruhat_order(os);
    std::string format = opt.format.empty() ? "dot" : opt.format;
    if (format == "dot") {
        out << orbitgeom::hasse_dot(poset);
    } else if (format == "json") {
        json doc;
        doc["schema"] = 1;
        doc["pair"] = orbitgeom::pair_name(poset.pair);
        doc["nodes"] = json::array();
        for (const auto& rec : poset.orbits)
            doc["nodes"].push_back({{"id", rec.id}, {"dim", rec.dim}});
        doc["covers"] = json::array();
        for (const auto& e : poset.covers)
            doc["covers"].push_back({{"lower", e.lower},
                                     {"upper", e.upper},
                                     {"solid", e.solid},
                                     {"label", e.solid ? "s" + std::to_string(e.label) : ""}});
        out << doc.dump(2) << "\n";
    } else {
        throw CLI::ValidationError("--format", "hasse supports dot or json");
    }
}

void emit_action(const Options& opt, std::ostream& out, bool conormal_side) {
    auto pr = parse_pair(opt.pair);
    auto data = pipeline::load_pair(pr, opt.fixtures);
    std::vector<IntMat> mats;
    std::string basis;
    if (!conormal_side) {
        mats = data.action.mats;
        basis = "P";
    } else if (is_integral_pair(pr)) {
        auto solved = pipeline::solve_integral(opt.fixtures, opt.bound);
        mats = solved.solved.wact.mats;
        basis = "T";
    } else {
        auto cc = ccsolver::cc_nonintegral(data.orbits, data.params);
        mats = ccsolver::wact_nonintegral(data.orbits, data.action, data.params).mats;
        basis = "T";
    }
    std::string format = opt.format.empty() ? "tsv" : opt.format;
    if (format == "tsv") {
        out << "generator\tsource\ttarget\tcoeff\n";
        for (size_t s = 0; s < mats.size(); ++s)
            for (int src = 0; src < mats[s].cols; ++src)
                for (int tgt = 0; tgt < mats[s].rows; ++tgt)
                    if (mats[s].at(tgt, src) != 0)
                        out << s + 1 << "\t" << src << "\t" << tgt << "\t" << mats[s].at(tgt, src)
                            << "\n";
    } else if (format == "json") {
        json doc;
        doc["schema"] = 1;
        doc["pair"] = orbitgeom::pair_name(pr);
        doc["basis"] = basis;
        doc["generators"] = json::array();
        for (const auto& m : mats) doc["generators"].push_back(matrix_json(m));
        out << doc.dump(2) << "\n";
    } else {
        throw CLI::ValidationError("--format", "supported formats: tsv, json");
    }
}

void emit_cc(const Options& opt, std::ostream& out) {
    auto pr = parse_pair(opt.pair);
    ccsolver::CCMatrix cc;
    if (is_integral_pair(pr)) {
        cc = pipeline::solve_integral(opt.fixtures, opt.bound).solved.cc;
    } else {
        auto data = pipeline::load_pair(pr, opt.fixtures);
        cc = ccsolver::cc_nonintegral(data.orbits, data.params);
    }
    std::string format = opt.format.empty() ? "tsv" : opt.format;
    if (format == "tsv") {
        out << "orbit";
        for (int xi = 0; xi < cc.nparams; ++xi) out << "\txi" << xi;
        out << "\n";
        for (int orbit = 0; orbit < cc.norbits; ++orbit) {
            out << "S" << orbit;
            for (int xi = 0; xi < cc.nparams; ++xi) out << "\t" << cc.chi[orbit][xi];
            out << "\n";
        }
    } else if (format == "json") {
        json doc;
        doc["schema"] = 1;
        doc["pair"] = orbitgeom::pair_name(pr);
        doc["chi"] = matrix_json(cc.as_matrix());
        out << doc.dump(2) << "\n";
    } else {
        throw CLI::ValidationError("--format", "cc supports tsv or json");
    }
}

json packet_json(const packets::MicroPacket& p) {
    json eta = json::object();
    for (const auto& [xi, c] : p.eta) eta[std::to_string(xi)] = c;
    json members = json::array();
    for (int m : p.members) members.push_back(m);
    return {{"orbit", p.orbit}, {"members", members}, {"eta", eta}};
}

void emit_packets(const Options& opt, std::ostream& out) {
    auto pr = parse_pair(opt.pair);
    auto data = pipeline::load_pair(pr, opt.fixtures);
    std::vector<packets::MicroPacket> list;
    if (is_integral_pair(pr)) {
        auto solved = pipeline::solve_integral(opt.fixtures, opt.bound);
        for (int orbit = 0; orbit < data.orbits.size(); ++orbit)
            list.push_back(packets::micro_packet(solved.solved.cc, data.orbits, data.params, orbit));
    } else {
        for (int orbit = 0; orbit < data.orbits.size(); ++orbit)
            list.push_back(packets::l_packet_nonintegral(data.orbits, data.params, orbit));
    }
    std::string format = opt.format.empty() ? "json" : opt.format;
    if (format == "json") {
        json doc;
        doc["schema"] = 1;
        doc["pair"] = orbitgeom::pair_name(pr);
        doc["packets"] = json::array();
        for (const auto& p : list) doc["packets"].push_back(packet_json(p));
        out << doc.dump(2) << "\n";
    } else if (format == "tsv") {
        out << "orbit\tmembers\teta\n";
        for (const auto& p : list) {
            out << "S" << p.orbit << "\t";
            for (size_t i = 0; i < p.members.size(); ++i)
                out << (i ? "," : "") << "xi" << p.members[i];
            out << "\t" << packets::eta_string(p) << "\n";
        }
    } else {
        throw CLI::ValidationError("--format", "packets supports json or tsv");
    }
}

void emit_glambda(const Options& opt, std::ostream& out) {
    auto comma = opt.lambda.find(',');
    if (opt.lambda.empty() || comma == std::string::npos)
        throw CLI::ValidationError("--lambda", "expected rational coordinates c1,c2");
    rootsys::QVec2 lambda{parse_rational(opt.lambda.substr(0, comma)),
                          parse_rational(opt.lambda.substr(comma + 1))};
    auto type = orbitgeom::integral_subsystem(lambda);
    auto options = orbitgeom::k_lambda_options(type);
    out << orbitgeom::group_name(options.front().group) << "; K options: ";
    for (size_t i = 0; i < options.size(); ++i)
        out << (i ? ", " : "") << orbitgeom::group_name(options[i].k);
    out << "\n";
}

void emit_singular(const Options& opt, std::ostream& out) {
    if (opt.singular_mode != "subregular")
        throw CLI::ValidationError("singular", "only the subregular block is materialized; other "
                                               "singular characters reduce to L-packets after translation");
    auto solved = pipeline::solve_integral(opt.fixtures, opt.bound);
    auto block = translation::subregular_block(solved.pair.orbits, solved.pair.params);
    auto qcc = translation::singular_cc(block, solved.solved.cc);
    json doc;
    doc["schema"] = 1;
    doc["case"] = "subregular";
    doc["q_orbits"] = json::array();
    for (int q = 0; q < block.nq(); ++q) {
        json fib = json::array();
        for (int s : block.fiber[q]) fib.push_back(s);
        doc["q_orbits"].push_back({{"id", q},
                                   {"dim", block.q_dims[q]},
                                   {"fiber", fib},
                                   {"f_star_orbit", block.f_star_orbit[q]},
                                   {"provenance", block.fiber_provenance[q]}});
    }
    doc["psi_a"] = block.psi_a;
    doc["psi_b"] = block.psi_b;
    doc["pushforward"] = json::object();
    for (int g = 0; g < block.ngamma(); ++g)
        doc["pushforward"]["gamma" + std::to_string(g)] = {{"xi", block.pushforward[g]},
                                                           {"provenance", "paper"}};
    doc["chi"] = matrix_json(qcc.as_matrix());
    doc["packets"] = json::array();
    for (int q = 0; q < block.nq(); ++q)
        doc["packets"].push_back(packet_json(translation::singular_packet(block, qcc, q)));
    out << doc.dump(2) << "\n";
}

void emit_euler(const Options& opt, std::ostream& out) {
    auto solved = pipeline::solve_integral(opt.fixtures, opt.bound);
    euler::EulerMatrix result;
    if (opt.euler_case == "integral") {
        auto leq = euler::closure_leq(solved.pair.orbits);
        auto dims = pipeline::orbit_dims(solved.pair.orbits);
        auto seed = euler::load_euler(opt.fixtures + "/euler_g2.tsv", leq, 10);
        auto chi_loc = euler::local_mult_from_paper(solved.solved.cc, seed, dims);
        std::vector<int> triv(10);
        for (int i = 0; i < 10; ++i) triv[i] = orbitgeom::trivial_parameter(solved.pair.params, i);
        result = euler::solve_euler(chi_loc, solved.solved.cc, dims, leq, triv);
    } else if (opt.euler_case == "subregular") {
        auto block = translation::subregular_block(solved.pair.orbits, solved.pair.params);
        euler::ClosureLeq qleq(block.nq(), std::vector<bool>(block.nq(), false));
        for (int q = 0; q < block.nq(); ++q) qleq[q][q] = true;
        for (auto [lo, hi] : block.q_covers) qleq[lo][hi] = true;
        for (bool changed = true; changed;) {
            changed = false;
            for (int a = 0; a < block.nq(); ++a)
                for (int b = 0; b < block.nq(); ++b)
                    if (qleq[a][b])
                        for (int d = 0; d < block.nq(); ++d)
                            if (qleq[b][d] && !qleq[a][d]) { qleq[a][d] = true; changed = true; }
        }
        auto seed = euler::load_euler(opt.fixtures + "/euler_subregular.tsv", qleq, 5);
        auto qcc = translation::singular_cc(block, solved.solved.cc);
        auto chi_loc = euler::local_mult_from_paper(qcc, seed, block.q_dims);
        result = euler::solve_euler(chi_loc, qcc, block.q_dims, qleq, {0, 1, 2, 3, 4});
    } else {
        throw CLI::ValidationError("--case", "euler supports integral or subregular");
    }
    std::string format = opt.format.empty() ? "tsv" : opt.format;
    if (format == "tsv") {
        for (int i = 0; i < result.n; ++i) {
            for (int j = 0; j < result.n; ++j) out << (j ? "\t" : "") << result.a[i][j];
            out << "\n";
        }
    } else if (format == "json") {
        json doc;
        doc["schema"] = 1;
        doc["case"] = opt.euler_case;
        doc["a"] = json::array();
        for (const auto& row : result.a) doc["a"].push_back(row);
        out << doc.dump(2) << "\n";
    } else {
        throw CLI::ValidationError("--format", "euler supports tsv or json");
    }
}

int emit_selftest(const Options& opt, std::ostream& out) {
    auto results = acceptance::run_all(opt.fixtures);
    for (const auto& c : results) {
        out << (c.pass ? "PASS" : "FAIL") << " " << c.number << " " << c.name;
        if (!c.pass && !c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
    bool ok = acceptance::all_passed(results);
    out << (ok ? "selftest: all criteria passed\n" : "selftest: FAILURES\n");
    return ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact micro-packet computations for the real forms of G2"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--fixtures", opt.fixtures, "fixture directory")->capture_default_str();

    auto add_common = [&](CLI::App* cmd, bool with_pair = true) {
        if (with_pair) cmd->add_option("--pair", opt.pair, "symmetric pair")->capture_default_str();
        cmd->add_option("--format", opt.format, "output format");
        cmd->add_option("--bound", opt.bound, "solver bound per unknown")->capture_default_str();
        return cmd;
    };

    auto* orbits = add_common(app.add_subcommand("orbits", "orbit table of a pair"));
    auto* hasse = add_common(app.add_subcommand("hasse", "Bruhat order as DOT"));
    auto* coherent = add_common(app.add_subcommand("coherent", "coherent continuation matrices"));
    auto* cc = add_common(app.add_subcommand("cc", "characteristic-cycle multiplicities"));
    auto* wact = add_common(app.add_subcommand("wact", "W-action on conormal classes"));
    auto* pks = add_common(app.add_subcommand("packets", "micro-packets and stable sums"));
    auto* glambda = app.add_subcommand("glambda", "centralizer type of an infinitesimal character");
    glambda->add_option("--lambda", opt.lambda, "rational coordinates c1,c2 in the root basis")
        ->required();
    auto* singular = app.add_subcommand("singular", "singular-character block");
    singular->add_option("mode", opt.singular_mode, "block name (subregular)");
    singular->add_option("--bound", opt.bound, "solver bound per unknown");
    auto* eul = app.add_subcommand("euler", "local Euler obstruction matrix");
    eul->add_option("--case", opt.euler_case, "integral or subregular")->capture_default_str();
    eul->add_option("--format", opt.format, "output format");
    eul->add_option("--bound", opt.bound, "solver bound per unknown");
    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 1;
    }

    try {
        if (orbits->parsed()) emit_orbits(opt, out);
        else if (hasse->parsed()) emit_hasse(opt, out);
        else if (coherent->parsed()) emit_action(opt, out, false);
        else if (cc->parsed()) emit_cc(opt, out);
        else if (wact->parsed()) emit_action(opt, out, true);
        else if (pks->parsed()) emit_packets(opt, out);
        else if (glambda->parsed()) emit_glambda(opt, out);
        else if (singular->parsed()) emit_singular(opt, out);
        else if (eul->parsed()) emit_euler(opt, out);
        else if (selftest->parsed()) return emit_selftest(opt, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const FixtureError& e) {
        err << "fixture error: " << e.what() << "\n";
        return 2;
    } catch (const ccsolver::SolveError& e) {
        err << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace g2micro::cli
