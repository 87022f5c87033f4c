// polymut: exact toolkit for combinatorial mutations of rational polytopes.
//
// Subcommands: gen | mutate | dual | check | explore | ehrhart.
// All numeric I/O is exact ("p/q" strings); outputs are canonically ordered,
// so repeated runs are byte-identical.
//
// Exit codes: 0 success, 2 usage or input error, 3 failed check or mutation
// diagnostic, 4 inconclusive search.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "polymut/cluster.hpp"
#include "polymut/json_io.hpp"
#include "polymut/lie.hpp"
#include "polymut/mutation.hpp"
#include "polymut/polytope.hpp"
#include "polymut/poset.hpp"

using namespace polymut;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailure {};        // report already printed
struct CheckInconclusive {};   // report already printed

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
    return j;
}

IntVec parse_weight(const std::string& text) {
    IntVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw UsageError("empty weight coordinate in '" + text + "'");
        Rat r = parse_rat(item);
        if (!is_integer(r)) throw UsageError("weight coordinates must be integers");
        out.push_back(rat_num(r));
    }
    if (out.empty()) throw UsageError("empty weight");
    return out;
}

RatVec parse_point(const std::string& text) {
    RatVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    return out;
}

std::vector<std::string> parse_labels(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

// ---------------------------------------------------------------- reports --

struct Report {
    json checks = json::array();
    bool failed = false;
    bool inconclusive = false;

    json& add(const std::string& name, const std::string& status) {
        json entry;
        entry["name"] = name;
        entry["status"] = status;
        if (status == "fail") failed = true;
        if (status == "inconclusive") inconclusive = true;
        checks.push_back(std::move(entry));
        return checks.back();
    }

    void finish(const std::string& command) const {
        json doc;
        doc["command"] = command;
        doc["checks"] = checks;
        emit(doc);
        if (failed) throw CheckFailure{};
        if (inconclusive) throw CheckInconclusive{};
    }
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

// ------------------------------------------------------------ subcommands --

struct GenArgs {
    std::string kind;
    size_t n = 0;
    std::string lambda, poset_file, pi_prime;
    bool has_pi_prime = false;
};

RationalPolytope run_gen(const GenArgs& a) {
    auto need_lambda = [&] {
        if (a.lambda.empty()) throw UsageError(a.kind + " needs --lambda");
        return parse_weight(a.lambda);
    };
    auto need_n = [&] {
        if (a.n == 0) throw UsageError(a.kind + " needs --n");
        return a.n;
    };
    auto need_poset = [&] {
        if (a.poset_file.empty()) throw UsageError(a.kind + " needs --poset");
        return poset_from_json(read_json_file(a.poset_file));
    };
    if (a.kind == "gt-a") return gt_polytope_A(need_n(), need_lambda());
    if (a.kind == "gt-c") return gt_polytope_C(need_n(), need_lambda());
    if (a.kind == "fflv-a") return fflv_A(need_n(), need_lambda());
    if (a.kind == "fflv-c") return fflv_C(need_n(), need_lambda());
    if (a.kind == "sl4-nobody") return sl4_no_body(need_lambda());
    if (a.kind == "nz-sp4") return nz_sp4(need_lambda());
    if (a.kind == "marked-order") return order_polytope(need_poset());
    if (a.kind == "marked-chain") return chain_polytope(need_poset());
    if (a.kind == "marked-chain-order") {
        if (!a.has_pi_prime) throw UsageError("marked-chain-order needs --pi-prime");
        MarkedPoset mp = need_poset();
        auto labels = a.pi_prime.empty() ? std::vector<std::string>{} : parse_labels(a.pi_prime);
        return chain_order_polytope(mp, labels);
    }
    throw UsageError("unknown gen kind " + a.kind);
}

int run_mutate(const std::string& side, const std::string& polytope_file,
               const std::string& datum_file, const std::string& seed_file, long long k) {
    RationalPolytope p = polytope_from_json(read_json_file(polytope_file));
    if (side == "M" || side == "N") {
        if (datum_file.empty()) throw UsageError("mutate --side " + side + " needs --datum");
        ParsedDatum pd = datum_from_json(read_json_file(datum_file));
        if (side == "M") {
            auto img = phi_polytope(pd.datum, p);
            if (auto* bad_img = std::get_if<NonConvexImage>(&img)) {
                json diag;
                diag["error"] = "non-convex-image";
                diag["hull"] = to_json(bad_img->hull);
                diag["hull_volume"] = rat_to_json(bad_img->hull_volume);
                diag["piece_volume_sum"] = rat_to_json(bad_img->piece_volume_sum);
                emit(diag);
                return 3;
            }
            emit(to_json(std::get<RationalPolytope>(img)));
            return 0;
        }
        auto img = mutate(pd.datum, p);
        if (auto* bad_img = std::get_if<NotWellDefined>(&img)) {
            json diag;
            diag["error"] = "not-well-defined";
            diag["vertex"] = to_json(bad_img->vertex);
            diag["level"] = int_to_json(bad_img->level);
            emit(diag);
            return 3;
        }
        emit(to_json(std::get<RationalPolytope>(img)));
        return 0;
    }
    if (side != "tropical") throw UsageError("--side must be M, N or tropical");
    if (seed_file.empty()) throw UsageError("mutate --side tropical needs --seed");
    if (k < 1) throw UsageError("mutate --side tropical needs --k (1-based index in J)");
    Seed s = seed_from_json(read_json_file(seed_file));
    SeedGraphNode node{s, p, {}};
    SeedGraphNode next = tropical_mutate_polytope(node, (size_t)k - 1);
    emit(to_json(next.payload));
    return 0;
}

// the point a dual gets taken at: --at when given, else the unique interior
// lattice point (entry added to the report on failure)
std::optional<RatVec> dual_base_point(Report& rep, const RationalPolytope& p,
                                      const std::string& at) {
    if (!at.empty()) return parse_point(at);
    auto pts = interior_lattice_points(p);
    if (pts.size() == 1) return to_rat(pts[0]);
    json& e = rep.add("unique-interior-point", "fail");
    e["count"] = pts.size();
    json w = json::array();
    for (const auto& q : pts) w.push_back(to_json(q));
    e["points"] = std::move(w);
    return std::nullopt;
}

void check_duality(Report& rep, const RationalPolytope& p, const MutationDatum& d) {
    auto mut = mutate(d, p);
    if (auto* bad_mut = std::get_if<NotWellDefined>(&mut)) {
        json& e = rep.add("duality", "fail");
        e["reason"] = "mutation not well defined";
        e["vertex"] = to_json(bad_mut->vertex);
        e["level"] = int_to_json(bad_mut->level);
        return;
    }
    auto img = phi_polytope(d, polar(p));
    if (std::holds_alternative<NonConvexImage>(img)) {
        json& e = rep.add("duality", "fail");
        e["reason"] = "phi image of the dual is not convex";
        return;
    }
    const RationalPolytope& lhs = std::get<RationalPolytope>(img);
    RationalPolytope rhs = polar(std::get<RationalPolytope>(mut));
    json& e = rep.add("duality", lhs == rhs ? "pass" : "fail");
    e["phi_of_dual"] = to_json(lhs);
    e["dual_of_mutation"] = to_json(rhs);
}

void check_reflexive_dual(Report& rep, const RationalPolytope& p, const std::string& at) {
    auto base = dual_base_point(rep, p, at);
    if (!base) return;
    RationalPolytope d = dual_at(p, *base);
    json& e = rep.add("reflexive-dual", d.is_lattice() ? "pass" : "fail");
    e["at"] = to_json(*base);
    e["dual"] = to_json(d);
}

void check_interior(Report& rep, const RationalPolytope& p, const std::string& expect) {
    auto pts = interior_lattice_points(p);
    bool ok = pts.size() == 1;
    if (ok && !expect.empty()) {
        RatVec want = parse_point(expect);
        ok = to_rat(pts[0]) == want;
    }
    json& e = rep.add("interior", ok ? "pass" : "fail");
    json w = json::array();
    for (const auto& q : pts) w.push_back(to_json(q));
    e["points"] = std::move(w);
}

void check_equivalent(Report& rep, const RationalPolytope& p, const RationalPolytope& q,
                      size_t budget) {
    EquivalenceResult r = affine_unimodular_equivalent(p, q, budget);
    if (r.certificate) {
        const auto& [m, t] = *r.certificate;
        bool verified = apply_affine(p, m, t) == q && is_unimodular(m);
        json& e = rep.add("equivalent", verified ? "pass" : "fail");
        e["matrix"] = to_json(m);
        e["translate"] = to_json(t);
        e["verified"] = verified;
        return;
    }
    json& e = rep.add("equivalent", r.inconclusive ? "inconclusive" : "fail");
    e["frame_budget"] = budget;
}

void check_ehrhart_dual_invariance(Report& rep, const RationalPolytope& p,
                                   const MutationDatum& d, int kmax) {
    auto mut = mutate(d, p);
    if (auto* bad_mut = std::get_if<NotWellDefined>(&mut)) {
        json& e = rep.add("ehrhart-dual-invariance", "fail");
        e["reason"] = "mutation not well defined";
        e["vertex"] = to_json(bad_mut->vertex);
        return;
    }
    auto before = ehrhart_counts(polar(p), kmax);
    auto after = ehrhart_counts(polar(std::get<RationalPolytope>(mut)), kmax);
    json& e = rep.add("ehrhart-dual-invariance", before == after ? "pass" : "fail");
    e["dual_counts_before"] = to_json(before);
    e["dual_counts_after"] = to_json(after);
}

void check_transfer_factorization(Report& rep, const MarkedPoset& mp) {
    IntVec u;
    try {
        u = admissible_u(mp);
    } catch (const AssumptionViolated& e) {
        json& entry = rep.add("transfer-factorization", "fail");
        entry["reason"] = e.what();
        return;
    }
    TransferFactorization tf = transfer_factorization(mp, u);
    RationalPolytope cur = order_polytope(mp);
    auto start_counts = lattice_points(cur).size();
    for (size_t i = 0; i < tf.trace.steps.size(); ++i) {
        const TraceStep& st = tf.trace.steps[i];
        if (st.translate) cur = translate(cur, *st.translate);
        if (st.map) {
            auto img = phi_polytope(*st.map, cur);
            if (std::holds_alternative<NonConvexImage>(img)) {
                json& e = rep.add("transfer-factorization", "fail");
                e["reason"] = "intermediate image is not convex";
                e["step"] = i;
                return;
            }
            cur = std::get<RationalPolytope>(img);
        }
        bool translated_lattice = true;
        const auto& vs = cur.vertices();
        for (const auto& v : vs)
            for (size_t j = 0; j < v.size(); ++j)
                translated_lattice = translated_lattice && is_integer(v[j] - vs[0][j]);
        if (cur != tf.expected[i] || !translated_lattice) {
            json& e = rep.add("transfer-factorization", "fail");
            e["reason"] = cur != tf.expected[i] ? "intermediate differs from marked poset image"
                                                : "intermediate is not a translated lattice polytope";
            e["step"] = i;
            e["got"] = to_json(cur);
            e["expected"] = to_json(tf.expected[i]);
            return;
        }
    }
    RatVec back = tf.shift;
    for (auto& x : back) x = -x;
    RationalPolytope endpoint = translate(chain_polytope(mp), back);
    bool end_ok = cur == endpoint;
    auto end_counts = lattice_points(cur).size();
    json& e = rep.add("transfer-factorization",
                      end_ok && start_counts == end_counts ? "pass" : "fail");
    e["u"] = to_json(u);
    e["shift"] = to_json(tf.shift);
    e["steps"] = tf.order;
    e["lattice_points_start"] = start_counts;
    e["lattice_points_end"] = end_counts;
}

void check_counterexample(Report& rep, const IntVec& lambda) {
    CounterexampleWitness w = counterexample_witness(lambda);
    json& e = rep.add("counterexample",
                      w.branches_match_transfer && w.no_common_fixed_point ? "pass" : "fail");
    e["lambda"] = to_json(lambda);
    e["branches_match_transfer"] = w.branches_match_transfer;
    e["no_common_fixed_point"] = w.no_common_fixed_point;
    json branches = json::array();
    for (size_t i = 0; i < w.branch_linear.size(); ++i) {
        json b;
        b["linear"] = to_json(w.branch_linear[i]);
        b["constant"] = to_json(w.branch_constant[i]);
        branches.push_back(std::move(b));
    }
    e["branches"] = std::move(branches);
}

void run_explore(Report& rep, json& nodes_out, const Seed& seed, const RationalPolytope& payload,
                 size_t depth) {
    ExploreResult res = explore(SeedGraphNode{seed, payload, {}}, depth);

    bool interior_ok = true, dual_ok = true, ehrhart_ok = true;
    std::vector<Int> reference;
    for (const ExploreEntry& entry : res.entries) {
        interior_ok = interior_ok && entry.interior_points.size() == 1;
        dual_ok = dual_ok && entry.dual_is_lattice.value_or(false);
        auto counts = ehrhart_counts(entry.node.payload, 2);
        if (reference.empty())
            reference = counts;
        else
            ehrhart_ok = ehrhart_ok && counts == reference;

        json n;
        json path = json::array();
        for (size_t k : entry.node.path) path.push_back(k + 1);
        n["path"] = std::move(path);
        n["multiplicity"] = entry.multiplicity;
        n["seed"] = to_json(entry.node.seed);
        n["payload"] = to_json(entry.node.payload);
        json ipts = json::array();
        for (const auto& q : entry.interior_points) ipts.push_back(to_json(q));
        n["interior_points"] = std::move(ipts);
        if (entry.dual_is_lattice) n["dual_is_lattice"] = *entry.dual_is_lattice;
        n["dual_self_counts"] = to_json(entry.dual_ehrhart);
        n["payload_counts"] = to_json(counts);
        nodes_out.push_back(std::move(n));
    }

    rep.add("unique-interior-point", interior_ok ? "pass" : "fail")["nodes"] =
        res.entries.size();
    rep.add("lattice-dual", dual_ok ? "pass" : "fail");
    json& e = rep.add("dual-ehrhart-invariance", ehrhart_ok ? "pass" : "fail");
    e["counts"] = to_json(reference);
    e["visited"] = res.visited;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact combinatorial mutations of rational polytopes"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a polytope as canonical JSON");
    gen->add_option("kind", gen_args.kind,
                    "gt-a | gt-c | fflv-a | fflv-c | sl4-nobody | nz-sp4 | marked-order | "
                    "marked-chain | marked-chain-order")
        ->required();
    gen->add_option("--n", gen_args.n, "rank");
    gen->add_option("--lambda", gen_args.lambda, "weight, e.g. 2,2,2");
    gen->add_option("--poset", gen_args.poset_file, "marked poset JSON file");
    gen->add_option("--pi-prime", gen_args.pi_prime, "comma-separated unmarked labels");

    std::string mut_side, mut_polytope, mut_datum, mut_seed;
    long long mut_k = 0;
    CLI::App* mut = app.add_subcommand("mutate", "apply a mutation map to a polytope");
    mut->add_option("--side", mut_side, "M | N | tropical")->required();
    mut->add_option("--polytope", mut_polytope, "polytope JSON file")->required();
    mut->add_option("--datum", mut_datum, "mutation datum JSON file");
    mut->add_option("--seed", mut_seed, "seed JSON file (tropical)");
    mut->add_option("--k", mut_k, "mutation direction, 1-based index in J (tropical)");

    std::string dual_polytope, dual_at_point;
    CLI::App* dual = app.add_subcommand("dual", "polar dual, optionally taken at a point");
    dual->add_option("--polytope", dual_polytope, "polytope JSON file")->required();
    dual->add_option("--at", dual_at_point, "base point, e.g. 0,0,1");

    std::string chk_kind, chk_polytope, chk_other, chk_datum, chk_at, chk_expect, chk_type,
        chk_lambda, chk_poset;
    size_t chk_n = 0, chk_budget = 500000;
    int chk_kmax = 3;
    CLI::App* chk = app.add_subcommand("check", "verify a property; emits a run report");
    chk->add_option("kind", chk_kind,
                    "duality | reflexive-dual | interior | equivalent | "
                    "ehrhart-dual-invariance | transfer-factorization | counterexample")
        ->required();
    chk->add_option("--polytope", chk_polytope, "polytope JSON file");
    chk->add_option("--other", chk_other, "second polytope JSON file");
    chk->add_option("--datum", chk_datum, "mutation datum JSON file");
    chk->add_option("--at", chk_at, "dual base point");
    chk->add_option("--expect", chk_expect, "expected interior point");
    chk->add_option("--type", chk_type, "Cartan type A | C");
    chk->add_option("--n", chk_n, "rank");
    chk->add_option("--lambda", chk_lambda, "weight");
    chk->add_option("--poset", chk_poset, "marked poset JSON file");
    chk->add_option("--budget", chk_budget, "equivalence frame budget");
    chk->add_option("--kmax", chk_kmax, "largest dilation compared");

    std::string exp_lambda = "2,2,2", exp_seed, exp_polytope;
    size_t exp_depth = 3;
    CLI::App* exp = app.add_subcommand("explore", "walk the exchange graph with a payload");
    exp->add_option("--lambda", exp_lambda, "weight for the built-in SL4 root");
    exp->add_option("--depth", exp_depth, "exploration depth");
    exp->add_option("--seed", exp_seed, "root seed JSON file");
    exp->add_option("--polytope", exp_polytope, "root payload JSON file");

    std::string ehr_polytope;
    int ehr_kmax = 3;
    CLI::App* ehr = app.add_subcommand("ehrhart", "lattice-point counts of dilations");
    ehr->add_option("--polytope", ehr_polytope, "polytope JSON file")->required();
    ehr->add_option("--kmax", ehr_kmax, "largest dilation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) {
        gen_args.has_pi_prime = gen->count("--pi-prime") > 0;
        emit(to_json(run_gen(gen_args)));
        return 0;
    }
    if (mut->parsed()) return run_mutate(mut_side, mut_polytope, mut_datum, mut_seed, mut_k);
    if (dual->parsed()) {
        RationalPolytope p = polytope_from_json(read_json_file(dual_polytope));
        RationalPolytope d = dual_at_point.empty()
                                 ? polar(p)
                                 : dual_at(p, parse_point(dual_at_point));
        emit(to_json(d));
        return 0;
    }
    if (chk->parsed()) {
        Report rep;
        auto polytope_arg = [&](const std::string& file, const char* flag) {
            if (file.empty()) throw UsageError(chk_kind + std::string(" needs ") + flag);
            return polytope_from_json(read_json_file(file));
        };
        if (chk_kind == "duality") {
            if (chk_datum.empty()) throw UsageError("duality needs --datum");
            check_duality(rep, polytope_arg(chk_polytope, "--polytope"),
                          datum_from_json(read_json_file(chk_datum)).datum);
        } else if (chk_kind == "reflexive-dual") {
            check_reflexive_dual(rep, polytope_arg(chk_polytope, "--polytope"), chk_at);
        } else if (chk_kind == "interior") {
            check_interior(rep, polytope_arg(chk_polytope, "--polytope"), chk_expect);
        } else if (chk_kind == "equivalent") {
            check_equivalent(rep, polytope_arg(chk_polytope, "--polytope"),
                             polytope_arg(chk_other, "--other"), chk_budget);
        } else if (chk_kind == "ehrhart-dual-invariance") {
            if (chk_datum.empty()) throw UsageError("ehrhart-dual-invariance needs --datum");
            check_ehrhart_dual_invariance(rep, polytope_arg(chk_polytope, "--polytope"),
                                          datum_from_json(read_json_file(chk_datum)).datum,
                                          chk_kmax);
        } else if (chk_kind == "transfer-factorization") {
            MarkedPoset mp = [&] {
                if (!chk_poset.empty()) return poset_from_json(read_json_file(chk_poset));
                if (chk_type.empty() || chk_n == 0 || chk_lambda.empty())
                    throw UsageError(
                        "transfer-factorization needs --poset or --type/--n/--lambda");
                if (chk_type != "A" && chk_type != "C")
                    throw UsageError("--type must be A or C");
                return gt_marked_poset(chk_type == "A" ? CartanType::A : CartanType::C, chk_n,
                                       parse_weight(chk_lambda));
            }();
            check_transfer_factorization(rep, mp);
        } else if (chk_kind == "counterexample") {
            check_counterexample(rep,
                                 parse_weight(chk_lambda.empty() ? "0,1,2,3" : chk_lambda));
        } else {
            throw UsageError("unknown check kind " + chk_kind);
        }
        rep.finish(join_args(argc, argv));
        return 0;
    }
    if (exp->parsed()) {
        Seed seed = exp_seed.empty()
                        ? exchange_from_word(cartan(CartanType::A, 3),
                                             standard_word(CartanType::A, 3))
                        : seed_from_json(read_json_file(exp_seed));
        RationalPolytope payload = exp_polytope.empty()
                                       ? sl4_no_body(parse_weight(exp_lambda))
                                       : polytope_from_json(read_json_file(exp_polytope));
        Report rep;
        json nodes = json::array();
        run_explore(rep, nodes, seed, payload, exp_depth);
        json doc;
        doc["command"] = join_args(argc, argv);
        doc["checks"] = rep.checks;
        doc["nodes"] = std::move(nodes);
        emit(doc);
        if (rep.failed) return 3;
        return 0;
    }
    if (ehr->parsed()) {
        RationalPolytope p = polytope_from_json(read_json_file(ehr_polytope));
        json doc;
        doc["kmax"] = ehr_kmax;
        doc["counts"] = to_json(ehrhart_counts(p, ehr_kmax));
        emit(doc);
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("POLYMUT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) {
            std::cerr << "POLYMUT_THREADS must be a positive integer\n";
            return 2;
        }
        // all kernels are exact and single-threaded; the cap is accepted and
        // the output contract is independent of it
    }
    try {
        return dispatch(argc, argv);
    } catch (const CheckFailure&) {
        return 3;
    } catch (const CheckInconclusive&) {
        return 4;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AssumptionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
