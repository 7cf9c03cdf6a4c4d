#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "davlab/additive.hpp"
#include "davlab/davenport.hpp"
#include "davlab/json_io.hpp"
#include "davlab/setpartition.hpp"
#include "davlab/witness.hpp"

namespace {

using davlab::Json;

constexpr std::uint64_t kDefaultSeed = 20260824;  // documented default; --seed overrides

struct GroupFlags {
    int s = -1, m = 0, r = 0;
    std::string ptype;
    std::string cayley_path;
};

void add_group_flags(CLI::App* cmd, GroupFlags& gf, bool allow_cayley = true) {
    cmd->add_option("--s", gf.s, "2-part exponent of n");
    cmd->add_option("--m", gf.m, "odd part of n");
    cmd->add_option("--r", gf.r, "conjugation exponent, in [1, n]");
    cmd->add_option("--ptype", gf.ptype, "presentation type A, B or C");
    if (allow_cayley)
        cmd->add_option("--cayley", gf.cayley_path, "Cayley table JSON file");
}

bool has_params(const GroupFlags& gf) { return gf.s >= 0 || gf.m || gf.r || !gf.ptype.empty(); }

davlab::Index2Params params_from_flags(const GroupFlags& gf) {
    if (gf.s < 0 || gf.m == 0 || gf.r == 0 || gf.ptype.empty())
        throw CLI::ValidationError("group", "need all of --s, --m, --r, --ptype");
    return davlab::Index2Params::make(gf.s, gf.m, gf.r,
                                      davlab::presentation_type_from_string(gf.ptype));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("io", "cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw CLI::ValidationError("io", "cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

void check_cap(int order, bool deep) {
    int cap = deep ? 16 : 12;
    if (order > cap)
        throw CLI::ValidationError(
            "cap", "group order " + std::to_string(order) + " exceeds the " +
                       (deep ? std::string("supported") : std::string("default")) +
                       " cap of " + std::to_string(cap) +
                       (deep ? "" : " (use --deep for order up to 16)"));
}

int thread_budget(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("DAVLAB_THREADS"))
        if (int v = std::atoi(env); v > 0) return v;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zero-sum toolkit for groups with a cyclic index-2 subgroup"};
    app.require_subcommand(1);

    int threads_flag = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string out_path;
    app.add_option("--threads", threads_flag, "parallelism budget (or DAVLAB_THREADS)");
    app.add_option("--seed", seed, "root RNG seed for randomized checks");
    app.add_option("--out", out_path, "write JSON output to this file");

    int exit_code = 0;  // 0 verified, 1 falsification, 2 usage error
    (void)thread_budget(threads_flag);  // reserved; all searches are deterministic

    // ---- group ----
    auto* group_cmd = app.add_subcommand("group", "construct and classify groups");
    group_cmd->require_subcommand(1);
    auto* group_build = group_cmd->add_subcommand("build", "Cayley table from parameters");
    GroupFlags gb;
    add_group_flags(group_build, gb, false);
    group_build->callback([&] {
        auto p = params_from_flags(gb);
        Json j;
        j["params"] = davlab::params_to_json(p);
        j["group"] = davlab::group_to_json(davlab::build_group(p));
        emit(j, out_path);
    });
    auto* group_classify =
        group_cmd->add_subcommand("classify", "all isomorphism classes up to an order");
    int max_order = 12;
    group_classify->add_option("--max-order", max_order, "largest group order");
    group_classify->callback([&] {
        Json j = Json::array();
        for (const auto& p : davlab::enumerate_groups(max_order))
            j.push_back(davlab::params_to_json(p));
        emit(j, out_path);
    });

    // ---- davenport ----
    auto* dav_cmd = app.add_subcommand("davenport", "Davenport constants by search");
    dav_cmd->require_subcommand(1);
    GroupFlags gdav;
    bool deep = false;
    for (const char* sub : {"small", "large", "verify"}) {
        auto* c = dav_cmd->add_subcommand(sub);
        add_group_flags(c, gdav, std::string(sub) != "verify");
        c->add_flag("--deep", deep, "allow group order up to 16");
    }
    dav_cmd->callback([&] {
        std::string sub = dav_cmd->get_subcommands().front()->get_name();
        if (sub == "verify") {
            auto p = params_from_flags(gdav);
            check_cap(p.order(), deep);
            auto rep = davlab::verify_main_theorem(p);
            emit(davlab::report_to_json(rep), out_path);
            if (!rep.match) exit_code = 1;
            return;
        }
        std::optional<davlab::FiniteGroup> g;
        if (!gdav.cayley_path.empty() && has_params(gdav))
            throw CLI::ValidationError("group", "give either parameters or --cayley, not both");
        if (!gdav.cayley_path.empty())
            g.emplace(davlab::group_from_json(read_json_file(gdav.cayley_path)));
        else
            g.emplace(davlab::build_group(params_from_flags(gdav)));
        check_cap(g->order(), deep);
        auto res = sub == "small" ? davlab::small_davenport(*g) : davlab::large_davenport(*g);
        Json j;
        j[sub == "small" ? "d" : "D"] = res.value;
        j["witness"] = davlab::sequence_to_json(res.witness);
        j["stats"]["states"] = res.stats.states;
        j["stats"]["seconds"] = res.stats.seconds;
        emit(j, out_path);
    });

    // ---- witness ----
    auto* wit_cmd = app.add_subcommand("witness", "explicit extremal atom construction");
    GroupFlags gwit;
    add_group_flags(wit_cmd, gwit, false);
    int check_upto = 0;
    wit_cmd->add_option("--check-all-upto", check_upto,
                        "verify the witness for every non-abelian group up to this order");
    wit_cmd->callback([&] {
        if (check_upto > 0) {
            Json j = Json::array();
            for (const auto& p : davlab::enumerate_groups(check_upto)) {
                if (p.r == 1) continue;
                auto g = davlab::build_group(p);
                auto w = davlab::lower_bound_witness(p, g);
                j.push_back(davlab::witness_to_json(w));
                if (!w.all_ok()) exit_code = 1;
            }
            emit(j, out_path);
            return;
        }
        auto p = params_from_flags(gwit);
        auto g = davlab::build_group(p);
        auto w = davlab::lower_bound_witness(p, g);
        emit(davlab::witness_to_json(w), out_path);
        if (!w.all_ok()) exit_code = 1;
    });

    // ---- bounds ----
    auto* bounds_cmd = app.add_subcommand("bounds", "subgroup-based inequalities");
    GroupFlags gbnd;
    add_group_flags(bounds_cmd, gbnd);
    bool bounds_deep = false;
    bounds_cmd->add_flag("--deep", bounds_deep, "allow group order up to 16");
    bounds_cmd->callback([&] {
        std::optional<davlab::FiniteGroup> g;
        if (!gbnd.cayley_path.empty())
            g.emplace(davlab::group_from_json(read_json_file(gbnd.cayley_path)));
        else
            g.emplace(davlab::build_group(params_from_flags(gbnd)));
        check_cap(g->order(), bounds_deep);
        auto rep = davlab::check_upper_bounds(*g);
        emit(davlab::bounds_to_json(rep), out_path);
        if (!rep.all_ok) exit_code = 1;
    });

    // ---- additive ----
    auto* add_cmd = app.add_subcommand("additive", "abelian additive-combinatorics checks");
    add_cmd->require_subcommand(1);
    int ap = 3, amod = 6, an = 1, atrials = 0, alen = 0;
    std::string asets, aseq, at1, at2;
    auto* cd = add_cmd->add_subcommand("cd", "iterated sumset bound over Z_p");
    cd->add_option("--p", ap, "prime modulus")->required();
    cd->add_option("--sets", asets, "JSON array of arrays of residues")->required();
    auto* dgm = add_cmd->add_subcommand("dgm", "n-sums lower bound");
    dgm->add_option("--mod", amod, "cyclic modulus")->required();
    dgm->add_option("--seq", aseq, "sequence JSON ([[label,mult],...])");
    dgm->add_option("--n", an, "subsequence length");
    dgm->add_option("--trials", atrials, "random trials instead of one instance");
    auto* keyeq = add_cmd->add_subcommand("keyeq", "doubled-sequence identity");
    keyeq->add_option("--mod", amod, "cyclic modulus")->required();
    keyeq->add_option("--seq", aseq, "sequence JSON");
    keyeq->add_option("--n", an, "subsequence length");
    keyeq->add_option("--trials", atrials, "random trials instead of one instance");
    auto* l43 = add_cmd->add_subcommand("lemma43", "equal-half factorization over Z_{2p}");
    l43->add_option("--p", ap, "odd prime")->required();
    l43->add_option("--t1", at1, "first half, sequence JSON");
    l43->add_option("--t2", at2, "second half, sequence JSON");
    l43->add_option("--trials", atrials, "random valid instances");
    l43->add_option("--len", alen, "total length for random instances");
    auto* dic = add_cmd->add_subcommand("dicyclic", "coset product-one characterization");
    dic->add_option("--p", ap, "odd prime")->required();
    dic->add_option("--seq", aseq, "sequence JSON over the dicyclic group");
    dic->add_option("--trials", atrials, "random trials");
    dic->add_option("--len", alen, "length for random trials");
    add_cmd->callback([&] {
        std::string sub = add_cmd->get_subcommands().front()->get_name();
        std::mt19937_64 rng(seed);
        Json lines = Json::array();
        bool all_ok = true;

        if (sub == "cd") {
            Json sj = Json::parse(asets);
            std::vector<davlab::ElementSet> sets;
            for (const auto& arr : sj) {
                davlab::ElementSet s(ap);
                for (int v : arr.get<std::vector<int>>()) s.insert(v);
                sets.push_back(s);
            }
            auto res = davlab::cauchy_davenport_check(sets, ap);
            Json j{{"sumset_size", res.sumset_size}, {"bound", res.bound}, {"ok", res.ok}};
            emit(j, out_path);
            if (!res.ok) exit_code = 1;
            return;
        }

        if (sub == "dgm" || sub == "keyeq") {
            auto zg = davlab::cyclic_group(amod);
            auto run_one = [&](const davlab::Sequence& s, int n, std::uint64_t tseed) {
                bool ok;
                Json j;
                if (sub == "dgm") {
                    auto res = davlab::dgm_check(s, n);
                    ok = res.ok;
                    j = {{"n", n},
                         {"sums_size", res.sums.size()},
                         {"bound", res.bound},
                         {"ok", ok}};
                } else {
                    ok = davlab::key_equivalence_check(s, n);
                    j = {{"n", n}, {"ok", ok}};
                }
                j["seq"] = davlab::sequence_to_json(s);
                j["seed"] = tseed;
                lines.push_back(j);
                all_ok = all_ok && ok;
            };
            if (atrials > 0) {
                for (int t = 0; t < atrials; ++t) {
                    std::uint64_t tseed = seed + t;
                    std::mt19937_64 trng(tseed);
                    std::uniform_int_distribution<int> len_pick(2, 8), el(0, amod - 1);
                    davlab::Sequence s(zg);
                    int len = len_pick(trng);
                    for (int i = 0; i < len; ++i) s.add(el(trng));
                    std::uniform_int_distribution<int> n_pick(1, len);
                    run_one(s, n_pick(trng), tseed);
                }
            } else {
                auto s = davlab::sequence_from_json(zg, Json::parse(aseq));
                run_one(s, an, seed);
            }
        } else if (sub == "lemma43") {
            auto zg = davlab::cyclic_group(2 * ap);
            auto run_one = [&](const davlab::Sequence& t1s, const davlab::Sequence& t2s,
                              std::uint64_t tseed) {
                auto q = davlab::lemma43_factorize(ap, t1s, t2s);
                Json j{{"u1", davlab::sequence_to_json(q.u1)},
                       {"u2", davlab::sequence_to_json(q.u2)},
                       {"v1_len", q.v1.length()},
                       {"ok", true},
                       {"seed", tseed}};
                lines.push_back(j);
            };
            if (atrials > 0) {
                int len = alen > 0 ? alen : 2 * ap + 4;
                for (int t = 0; t < atrials; ++t) {
                    std::uint64_t tseed = seed + t;
                    std::mt19937_64 trng(tseed);
                    auto [t1s, t2s] =
                        davlab::random_factorization_instance(zg, ap, len, trng);
                    run_one(t1s, t2s, tseed);
                }
            } else {
                run_one(davlab::sequence_from_json(zg, Json::parse(at1)),
                        davlab::sequence_from_json(zg, Json::parse(at2)), seed);
            }
        } else {  // dicyclic
            auto params = davlab::Index2Params::make(1, ap, 2 * ap - 1,
                                                     davlab::PresentationType::B);
            auto g = davlab::build_group(params);
            auto run_one = [&](const davlab::Sequence& r, std::uint64_t tseed) {
                bool charac = davlab::dicyclic_product_one_check(g, ap, r);
                bool direct = davlab::is_product_one(r);
                bool ok = charac == direct;
                lines.push_back(Json{{"characterization", charac},
                                     {"direct", direct},
                                     {"ok", ok},
                                     {"seq", davlab::sequence_to_json(r)},
                                     {"seed", tseed}});
                all_ok = all_ok && ok;
            };
            if (atrials > 0) {
                int len = alen > 0 ? alen : 8;
                for (int t = 0; t < atrials; ++t) {
                    std::uint64_t tseed = seed + t;
                    std::mt19937_64 trng(tseed);
                    std::uniform_int_distribution<int> x(0, 2 * ap - 1);
                    davlab::Sequence r(g);
                    for (int i = 0; i < len; ++i) r.add(2 * ap + x(trng));
                    run_one(r, tseed);
                }
            } else {
                run_one(davlab::sequence_from_json(g, Json::parse(aseq)), seed);
            }
        }
        Json j{{"trials", lines}, {"all_ok", all_ok}};
        emit(j, out_path);
        if (!all_ok) exit_code = 1;
    });

    // ---- setpartition ----
    auto* sp_cmd = app.add_subcommand("setpartition", "block-partition existence");
    auto* sp_check = sp_cmd->add_subcommand("check");
    std::string sp_mult;
    int sp_ell = 0, sp_n = 1;
    sp_check->add_option("--mult", sp_mult, "JSON multiplicity vector")->required();
    sp_check->add_option("--ell", sp_ell, "extra length over the block count")->required();
    sp_check->add_option("--n", sp_n, "number of blocks")->required();
    sp_check->callback([&] {
        auto mult = Json::parse(sp_mult).get<std::vector<int>>();
        auto res = davlab::find_subsequence_with_setpartition(mult, sp_ell, sp_n);
        Json j;
        j["exists"] = res.has_value();
        if (res) {
            j["kept"] = res->first;
            j["blocks"] = res->second.blocks;
        }
        emit(j, out_path);
    });

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "one-shot verification pipeline");
    auto* verify_thm = verify_cmd->add_subcommand("theorem");
    int vmax = 12;
    bool vdeep = false;
    verify_thm->add_option("--max-order", vmax, "largest group order");
    verify_thm->add_flag("--deep", vdeep, "allow group order up to 16");
    verify_thm->callback([&] {
        check_cap(vmax, vdeep);
        Json reports = Json::array();
        bool all = true;
        for (const auto& p : davlab::enumerate_groups(vmax)) {
            auto rep = davlab::verify_main_theorem(p);
            reports.push_back(davlab::report_to_json(rep));
            all = all && rep.match;
        }
        Json j{{"groups", reports.size()}, {"all_match", all}, {"reports", reports}};
        emit(j, out_path);
        if (!all) exit_code = 1;
    });

    // ---- export ----
    auto* export_cmd = app.add_subcommand("export", "tabulate a verification bundle");
    std::string exp_in, exp_format = "csv";
    export_cmd->add_option("--in", exp_in, "bundle JSON from 'verify theorem'")->required();
    export_cmd->add_option("--format", exp_format, "csv or json");
    export_cmd->callback([&] {
        Json bundle = read_json_file(exp_in);
        const char* cols[] = {"order", "s",  "m",         "r",         "type",  "kind", "n_plus",
                              "n_minus", "d", "D", "d_formula", "D_formula", "match"};
        Json rows = Json::array();
        for (const auto& rep : bundle.value("reports", Json::array())) {
            const auto& g = rep.at("group");
            Json row;
            row["order"] = g.at("order");
            row["s"] = g.at("s");
            row["m"] = g.at("m");
            row["r"] = g.at("r");
            row["type"] = g.at("ptype");
            row["kind"] = g.at("sylow_kind");
            row["n_plus"] = g.at("n_plus");
            row["n_minus"] = g.at("n_minus");
            row["d"] = rep.at("d");
            row["D"] = rep.at("D");
            row["d_formula"] = rep.at("d_formula");
            row["D_formula"] = rep.at("D_formula");
            row["match"] = rep.at("match");
            rows.push_back(row);
        }
        if (exp_format == "json") {
            emit(rows, out_path);
        } else if (exp_format == "csv") {
            std::string text;
            for (size_t i = 0; i < std::size(cols); ++i)
                text += std::string(i ? "," : "") + cols[i];
            text += "\n";
            for (const auto& row : rows) {
                for (size_t i = 0; i < std::size(cols); ++i) {
                    const auto& v = row.at(cols[i]);
                    text += (i ? "," : "") + (v.is_string() ? v.get<std::string>() : v.dump());
                }
                text += "\n";
            }
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) throw CLI::ValidationError("io", "cannot write " + out_path);
                out << text;
            }
        } else {
            throw CLI::ValidationError("format", "format must be csv or json");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
