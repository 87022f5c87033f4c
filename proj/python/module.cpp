// pybind11 bindings. Structured values cross the boundary as canonical JSON
// strings so arbitrary-precision rationals survive exactly; the polymut
// package wraps these in a pythonic layer (fractions.Fraction, dicts).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "polymut/cluster.hpp"
#include "polymut/json_io.hpp"
#include "polymut/lie.hpp"
#include "polymut/mutation.hpp"
#include "polymut/polytope.hpp"
#include "polymut/poset.hpp"

namespace py = pybind11;
using namespace polymut;

namespace {

std::string dumps(const json& j) { return j.dump(); }

RationalPolytope poly(const std::string& s) { return polytope_from_json(json::parse(s)); }
MutationDatum datum(const std::string& s) { return datum_from_json(json::parse(s)).datum; }
Seed seed(const std::string& s) { return seed_from_json(json::parse(s)); }
MarkedPoset poset(const std::string& s) { return poset_from_json(json::parse(s)); }
RatVec point(const std::string& s) { return ratvec_from_json(json::parse(s)); }
IntVec ivec(const std::string& s) { return intvec_from_json(json::parse(s)); }
IntMat imat(const std::string& s) { return intmat_from_json(json::parse(s)); }

CartanType type_of(const std::string& t) {
    if (t == "A") return CartanType::A;
    if (t == "C") return CartanType::C;
    if (t == "D") return CartanType::D;
    if (t == "E6") return CartanType::E6;
    if (t == "E7") return CartanType::E7;
    if (t == "E8") return CartanType::E8;
    throw std::invalid_argument("unknown Cartan type " + t);
}

}  // namespace

PYBIND11_MODULE(_polymut, m) {
    m.doc() = "exact combinatorial mutations of rational polytopes";

    // ---- polytopes ----
    m.def("canonical", [](const std::string& p) { return dumps(to_json(poly(p))); },
          "parse a polytope document and re-emit it in canonical form");
    m.def("polytope_dim", [](const std::string& p) { return poly(p).dim(); });
    m.def("polytope_ambient_dim", [](const std::string& p) { return poly(p).ambient_dim(); });
    m.def("polytope_is_lattice", [](const std::string& p) { return poly(p).is_lattice(); });
    m.def("polytope_contains",
          [](const std::string& p, const std::string& x) { return poly(p).contains(point(x)); });
    m.def("lattice_points", [](const std::string& p) {
        json out = json::array();
        for (const auto& v : lattice_points(poly(p))) out.push_back(to_json(v));
        return dumps(out);
    });
    m.def("interior_lattice_points", [](const std::string& p) {
        json out = json::array();
        for (const auto& v : interior_lattice_points(poly(p))) out.push_back(to_json(v));
        return dumps(out);
    });
    m.def("ehrhart_counts", [](const std::string& p, int kmax) {
        return dumps(to_json(ehrhart_counts(poly(p), kmax)));
    });
    m.def("volume", [](const std::string& p) { return dumps(rat_to_json(volume(poly(p)))); });
    m.def("lattice_volume",
          [](const std::string& p) { return dumps(rat_to_json(lattice_volume(poly(p)))); });
    m.def("polar", [](const std::string& p) { return dumps(to_json(polar(poly(p)))); });
    m.def("dual_at", [](const std::string& p, const std::string& a) {
        return dumps(to_json(dual_at(poly(p), point(a))));
    });
    m.def("translate", [](const std::string& p, const std::string& t) {
        return dumps(to_json(translate(poly(p), point(t))));
    });
    m.def("apply_affine", [](const std::string& p, const std::string& mm, const std::string& t) {
        return dumps(to_json(apply_affine(poly(p), imat(mm), ivec(t))));
    });
    m.def("minkowski_sum", [](const std::string& p, const std::string& q) {
        return dumps(to_json(minkowski_sum(poly(p), poly(q))));
    });
    m.def("affine_unimodular_equivalent",
          [](const std::string& p, const std::string& q, size_t budget) {
              EquivalenceResult r = affine_unimodular_equivalent(poly(p), poly(q), budget);
              json out;
              out["equivalent"] = r.certificate.has_value();
              out["inconclusive"] = r.inconclusive;
              if (r.certificate) {
                  out["matrix"] = to_json(r.certificate->first);
                  out["translate"] = to_json(r.certificate->second);
              }
              return dumps(out);
          },
          py::arg("p"), py::arg("q"), py::arg("budget") = 500000);

    // ---- mutation maps ----
    m.def("phi_point", [](const std::string& d, const std::string& x) {
        return dumps(to_json(phi_point(datum(d), point(x))));
    });
    m.def("phi_polytope", [](const std::string& d, const std::string& p) {
        auto r = phi_polytope(datum(d), poly(p));
        if (auto* bad = std::get_if<NonConvexImage>(&r))
            throw std::domain_error("piecewise image is not convex; hull volume " +
                                    dumps(rat_to_json(bad->hull_volume)) + ", pieces " +
                                    dumps(rat_to_json(bad->piece_volume_sum)));
        return dumps(to_json(std::get<RationalPolytope>(r)));
    });
    m.def("mutate", [](const std::string& d, const std::string& p) {
        auto r = mutate(datum(d), poly(p));
        if (auto* bad = std::get_if<NotWellDefined>(&r))
            throw std::domain_error("mutation not well defined at vertex " +
                                    dumps(to_json(bad->vertex)) + ", level " + bad->level.str());
        return dumps(to_json(std::get<RationalPolytope>(r)));
    });
    m.def("duality_holds", [](const std::string& d, const std::string& p) {
        return duality_holds(datum(d), poly(p));
    });

    // ---- cluster seeds ----
    m.def("make_seed", [](const std::string& eps, const std::vector<size_t>& unfrozen) {
        return dumps(to_json(make_seed(imat(eps), unfrozen)));
    });
    m.def("mutate_matrix", [](const std::string& s, size_t k) {
        return dumps(to_json(mutate_matrix(seed(s), k)));
    });
    m.def("tropical_mutate_point", [](const std::string& s, size_t k, const std::string& g) {
        return dumps(to_json(tropical_mutate_point(seed(s), k, point(g))));
    });
    m.def("decompose_tropical", [](const std::string& s, size_t k) {
        TropicalStep st = decompose_tropical(seed(s), k);
        json out;
        out["datum"] = datum_to_json(st.piecewise);
        out["linear"] = to_json(st.linear);
        return dumps(out);
    });
    m.def("tropical_mutate_polytope", [](const std::string& s, const std::string& p, size_t k) {
        SeedGraphNode next = tropical_mutate_polytope(SeedGraphNode{seed(s), poly(p), {}}, k);
        json out;
        out["seed"] = to_json(next.seed);
        out["payload"] = to_json(next.payload);
        return dumps(out);
    });
    m.def("explore", [](const std::string& s, const std::string& p, size_t depth) {
        ExploreResult res = explore(SeedGraphNode{seed(s), poly(p), {}}, depth);
        json out;
        out["visited"] = res.visited;
        json entries = json::array();
        for (const ExploreEntry& e : res.entries) {
            json n;
            n["path"] = e.node.path;
            n["multiplicity"] = e.multiplicity;
            n["seed"] = to_json(e.node.seed);
            n["payload"] = to_json(e.node.payload);
            json ipts = json::array();
            for (const auto& q : e.interior_points) ipts.push_back(to_json(q));
            n["interior_points"] = std::move(ipts);
            if (e.dual_is_lattice) n["dual_is_lattice"] = *e.dual_is_lattice;
            n["dual_ehrhart"] = to_json(e.dual_ehrhart);
            entries.push_back(std::move(n));
        }
        out["entries"] = std::move(entries);
        return dumps(out);
    });

    // ---- Lie-theoretic generators ----
    m.def("cartan_matrix", [](const std::string& t, size_t n) {
        return dumps(to_json(cartan(type_of(t), n).c));
    }, py::arg("type"), py::arg("n") = 0);
    m.def("standard_word", [](const std::string& t, size_t n) {
        return standard_word(type_of(t), n);
    }, py::arg("type"), py::arg("n") = 0);
    m.def("exchange_from_word", [](const std::string& t, size_t n) {
        CartanDatum cd = cartan(type_of(t), n);
        return dumps(to_json(exchange_from_word(cd, standard_word(type_of(t), n))));
    }, py::arg("type"), py::arg("n") = 0);
    m.def("string_interior_point", [](const std::string& t, size_t n) {
        CartanDatum cd = cartan(type_of(t), n);
        return dumps(to_json(string_interior_point(cd, standard_word(type_of(t), n))));
    }, py::arg("type"), py::arg("n") = 0);
    m.def("gt_polytope", [](const std::string& t, size_t n, const std::string& lam) {
        CartanType ct = type_of(t);
        if (ct == CartanType::A) return dumps(to_json(gt_polytope_A(n, ivec(lam))));
        if (ct == CartanType::C) return dumps(to_json(gt_polytope_C(n, ivec(lam))));
        throw std::invalid_argument("gt_polytope supports types A and C");
    });
    m.def("fflv_polytope", [](const std::string& t, size_t n, const std::string& lam) {
        CartanType ct = type_of(t);
        if (ct == CartanType::A) return dumps(to_json(fflv_A(n, ivec(lam))));
        if (ct == CartanType::C) return dumps(to_json(fflv_C(n, ivec(lam))));
        throw std::invalid_argument("fflv_polytope supports types A and C");
    });
    m.def("gt_marked_poset", [](const std::string& t, size_t n, const std::string& lam) {
        return dumps(to_json(gt_marked_poset(type_of(t), n, ivec(lam))));
    });
    m.def("sl4_no_body",
          [](const std::string& lam) { return dumps(to_json(sl4_no_body(ivec(lam)))); });
    m.def("nz_sp4", [](const std::string& lam) { return dumps(to_json(nz_sp4(ivec(lam)))); });

    // ---- marked posets ----
    m.def("order_polytope",
          [](const std::string& mp) { return dumps(to_json(order_polytope(poset(mp)))); });
    m.def("chain_polytope",
          [](const std::string& mp) { return dumps(to_json(chain_polytope(poset(mp)))); });
    m.def("chain_order_polytope",
          [](const std::string& mp, const std::vector<std::string>& pi_prime) {
              return dumps(to_json(chain_order_polytope(poset(mp), pi_prime)));
          });
    m.def("transfer", [](const std::string& mp, const std::vector<std::string>& pi_prime,
                         const std::string& x) {
        return dumps(to_json(transfer(poset(mp), pi_prime, point(x))));
    });
    m.def("admissible_u",
          [](const std::string& mp) { return dumps(to_json(admissible_u(poset(mp)))); });
    m.def("transfer_factorization", [](const std::string& mp) {
        MarkedPoset p = poset(mp);
        TransferFactorization tf = transfer_factorization(p, admissible_u(p));
        json out;
        out["order"] = tf.order;
        out["trace"] = to_json(tf.trace);
        json exp = json::array();
        for (const auto& e : tf.expected) exp.push_back(to_json(e));
        out["expected"] = std::move(exp);
        out["shift"] = to_json(tf.shift);
        return dumps(out);
    });
    m.def("counterexample_witness", [](const std::string& lam) {
        CounterexampleWitness w = counterexample_witness(ivec(lam));
        json out;
        out["poset"] = to_json(w.poset);
        out["branches_match_transfer"] = w.branches_match_transfer;
        out["no_common_fixed_point"] = w.no_common_fixed_point;
        return dumps(out);
    });
}
