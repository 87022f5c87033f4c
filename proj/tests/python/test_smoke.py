from fractions import Fraction

import polymut as pm


def test_worked_example_mutation_and_duality():
    p = pm.Polytope.from_vertices([(1, 1), (0, 1), (-1, -1), (0, -1)])
    datum = {"w": [0, -1], "F": {"dim": 2, "vertices": [[0, 0], [1, 0]]}}

    mut = pm.mutate(datum, p)
    assert mut.vertices == [(-1, -1), (0, 1), (1, -1)]

    dual = p.polar()
    assert dual.vertices == [(-2, 1), (0, -1), (0, 1), (2, -1)]

    image = pm.phi_polytope(datum, dual)
    assert image == mut.polar()
    assert image.vertices == [(-2, -1), (0, 1), (2, -1)]
    assert pm.duality_holds(datum, p)


def test_phi_point_is_piecewise_linear():
    datum = {"w": [0, -1], "F": {"dim": 2, "vertices": [[0, 0], [1, 0]]}}
    assert pm.phi_point(datum, (2, -1)) == (2, -1)
    assert pm.phi_point(datum, (-2, 1)) == (-2, -1)
    assert pm.phi_point(datum, (Fraction(-1, 2), 1)) == (Fraction(-1, 2), Fraction(1, 2))


def test_gt_polytope_interior_point():
    gt = pm.gt_polytope("A", 2, (2, 2))
    assert gt.dim == 3
    assert len(gt.lattice_points()) == 27
    assert gt.interior_lattice_points() == [(3, 1, 2)]
    assert gt.dual_at((3, 1, 2)).is_lattice()


def test_seed_mutation_fixture():
    seed = pm.exchange_from_word("A", 3)
    assert seed["epsilon"] == [
        [0, -1, 1, 0, 0, 0],
        [1, 0, -1, -1, 1, 0],
        [-1, 1, 0, 0, -1, 1],
    ]
    mutated = pm.mutate_matrix(seed, 1)
    assert mutated["epsilon"] == [
        [0, 1, 0, -1, 0, 0],
        [-1, 0, 1, 1, -1, 0],
        [0, -1, 0, 0, 0, 1],
    ]
    assert pm.mutate_matrix(mutated, 1) == seed
    assert pm.tropical_mutate_point(seed, 1, (0, 1, 0, 0, 0, 0)) == (1, -1, 0, 0, 1, 0)


def test_explore_keeps_dual_counts():
    seed = pm.exchange_from_word("A", 3)
    body = pm.sl4_no_body((2, 2, 2))
    out = pm.explore(seed, body, 1)
    assert len(out["entries"]) == 4
    for entry in out["entries"]:
        assert entry["interior_points"] == [[0, 0, 0, 1, 1, 1]]
        assert entry["dual_is_lattice"] is True
        assert entry["payload"].ehrhart_counts(1) == [729]


def test_marked_poset_transfer():
    mp = pm.gt_marked_poset("A", 2, (2, 2))
    order = pm.order_polytope(mp)
    chain = pm.chain_polytope(mp)
    assert len(order.lattice_points()) == len(chain.lattice_points()) == 27

    labels = [e for e in mp["elements"] if e not in mp["marked"]]
    for point in order.lattice_points():
        assert chain.contains(pm.transfer(mp, labels, point))

    assert pm.admissible_u(mp) == (3, 1, 2)
    tf = pm.transfer_factorization(mp)
    assert tf["order"] == ["a(1,1)", "a(2,1)", "a(1,2)"]
    assert tf["expected"][-1] == chain.translate([-x for x in tf["shift"]])


def test_counterexample_witness():
    w = pm.counterexample_witness((0, 1, 2, 3))
    assert w["branches_match_transfer"] is True
    assert w["no_common_fixed_point"] is True


def test_exact_rationals_round_trip():
    p = pm.Polytope.from_vertices([(Fraction(1, 3), 0), (0, Fraction(7, 2)), (-1, -1)])
    assert p.vertices == [(-1, -1), (0, Fraction(7, 2)), (Fraction(1, 3), 0)]
    assert pm.Polytope(p.to_dict()) == p
    assert p.volume() == Fraction(5, 2)
