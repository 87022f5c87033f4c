"""Exact combinatorial mutations of rational polytopes.

Thin pythonic layer over the compiled extension. Every structured value
crosses the boundary as canonical JSON so arbitrary-precision rationals stay
exact; this module converts between that wire form and plain python objects
(``fractions.Fraction``, ``int``, ``dict``).
"""

import json
from fractions import Fraction

from . import _polymut

__all__ = [
    "Polytope",
    "mutate",
    "phi_polytope",
    "phi_point",
    "duality_holds",
    "make_seed",
    "mutate_matrix",
    "tropical_mutate_point",
    "explore",
    "cartan_matrix",
    "standard_word",
    "exchange_from_word",
    "string_interior_point",
    "gt_polytope",
    "fflv_polytope",
    "gt_marked_poset",
    "sl4_no_body",
    "nz_sp4",
    "order_polytope",
    "chain_polytope",
    "chain_order_polytope",
    "transfer",
    "admissible_u",
    "transfer_factorization",
    "counterexample_witness",
]


def _to_wire(value):
    """Encode Fractions and big ints as the exact string form."""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value)
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value if -(2**63) < value < 2**63 else str(value)
    if isinstance(value, (list, tuple)):
        return [_to_wire(v) for v in value]
    if isinstance(value, dict):
        return {k: _to_wire(v) for k, v in value.items()}
    return value


def _from_wire(value):
    """Decode exact number strings back into ints and Fractions."""
    if isinstance(value, str):
        try:
            f = Fraction(value)
        except ValueError:
            return value
        return f.numerator if f.denominator == 1 else f
    if isinstance(value, list):
        return [_from_wire(v) for v in value]
    if isinstance(value, dict):
        return {k: _from_wire(v) for k, v in value.items()}
    return value


def _dump(value):
    return json.dumps(_to_wire(value))


def _load(text):
    return _from_wire(json.loads(text))


class Polytope:
    """A rational polytope held in its canonical document form."""

    def __init__(self, doc):
        if isinstance(doc, Polytope):
            self._text = doc._text
        elif isinstance(doc, str):
            self._text = _polymut.canonical(doc)
        else:
            self._text = _polymut.canonical(_dump(doc))

    @classmethod
    def from_vertices(cls, vertices):
        return cls({"dim": len(vertices[0]), "vertices": vertices})

    @classmethod
    def from_halfspaces(cls, dim, halfspaces):
        return cls({
            "dim": dim,
            "halfspaces": [{"normal": n, "rhs": r} for n, r in halfspaces],
        })

    @classmethod
    def _wrap(cls, text):
        p = cls.__new__(cls)
        p._text = text
        return p

    def to_dict(self):
        return _load(self._text)

    @property
    def vertices(self):
        return [tuple(v) for v in self.to_dict()["vertices"]]

    @property
    def halfspaces(self):
        return [(tuple(h["normal"]), h["rhs"]) for h in self.to_dict()["halfspaces"]]

    @property
    def dim(self):
        return _polymut.polytope_dim(self._text)

    @property
    def ambient_dim(self):
        return _polymut.polytope_ambient_dim(self._text)

    def is_lattice(self):
        return _polymut.polytope_is_lattice(self._text)

    def contains(self, x):
        return _polymut.polytope_contains(self._text, _dump(list(x)))

    def lattice_points(self):
        return [tuple(v) for v in _load(_polymut.lattice_points(self._text))]

    def interior_lattice_points(self):
        return [tuple(v) for v in _load(_polymut.interior_lattice_points(self._text))]

    def ehrhart_counts(self, kmax):
        return _load(_polymut.ehrhart_counts(self._text, kmax))

    def volume(self):
        return Fraction(_load(_polymut.volume(self._text)))

    def lattice_volume(self):
        return Fraction(_load(_polymut.lattice_volume(self._text)))

    def polar(self):
        return Polytope._wrap(_polymut.polar(self._text))

    def dual_at(self, a):
        return Polytope._wrap(_polymut.dual_at(self._text, _dump(list(a))))

    def translate(self, t):
        return Polytope._wrap(_polymut.translate(self._text, _dump(list(t))))

    def apply_affine(self, matrix, t):
        return Polytope._wrap(
            _polymut.apply_affine(self._text, _dump([list(r) for r in matrix]), _dump(list(t)))
        )

    def minkowski_sum(self, other):
        return Polytope._wrap(_polymut.minkowski_sum(self._text, Polytope(other)._text))

    def equivalent_to(self, other, budget=500000):
        return _load(
            _polymut.affine_unimodular_equivalent(self._text, Polytope(other)._text, budget)
        )

    def __eq__(self, other):
        return isinstance(other, Polytope) and self._text == other._text

    def __hash__(self):
        return hash(self._text)

    def __repr__(self):
        return "Polytope(vertices=%r)" % (self.vertices,)


def _datum_text(datum):
    d = dict(datum)
    d["F"] = Polytope(d["F"]).to_dict()
    d.setdefault("f", None)
    return _dump(d)


def mutate(datum, p):
    return Polytope._wrap(_polymut.mutate(_datum_text(datum), Polytope(p)._text))


def phi_polytope(datum, p):
    return Polytope._wrap(_polymut.phi_polytope(_datum_text(datum), Polytope(p)._text))


def phi_point(datum, x):
    return tuple(_load(_polymut.phi_point(_datum_text(datum), _dump(list(x)))))


def duality_holds(datum, p):
    return _polymut.duality_holds(_datum_text(datum), Polytope(p)._text)


def make_seed(eps, unfrozen):
    return _load(_polymut.make_seed(_dump([list(r) for r in eps]), list(unfrozen)))


def _seed_text(s):
    return _dump(s)


def mutate_matrix(s, k):
    return _load(_polymut.mutate_matrix(_seed_text(s), k))


def tropical_mutate_point(s, k, g):
    return tuple(_load(_polymut.tropical_mutate_point(_seed_text(s), k, _dump(list(g)))))


def explore(s, payload, depth):
    out = _load(_polymut.explore(_seed_text(s), Polytope(payload)._text, depth))
    for entry in out["entries"]:
        entry["payload"] = Polytope(_dump(entry["payload"]))
    return out


def cartan_matrix(type, n=0):
    return _load(_polymut.cartan_matrix(type, n))


def standard_word(type, n=0):
    return list(_polymut.standard_word(type, n))


def exchange_from_word(type, n=0):
    return _load(_polymut.exchange_from_word(type, n))


def string_interior_point(type, n=0):
    return tuple(_load(_polymut.string_interior_point(type, n)))


def gt_polytope(type, n, lam):
    return Polytope._wrap(_polymut.gt_polytope(type, n, _dump(list(lam))))


def fflv_polytope(type, n, lam):
    return Polytope._wrap(_polymut.fflv_polytope(type, n, _dump(list(lam))))


def gt_marked_poset(type, n, lam):
    return _load(_polymut.gt_marked_poset(type, n, _dump(list(lam))))


def sl4_no_body(lam):
    return Polytope._wrap(_polymut.sl4_no_body(_dump(list(lam))))


def nz_sp4(lam):
    return Polytope._wrap(_polymut.nz_sp4(_dump(list(lam))))


def order_polytope(mp):
    return Polytope._wrap(_polymut.order_polytope(_dump(mp)))


def chain_polytope(mp):
    return Polytope._wrap(_polymut.chain_polytope(_dump(mp)))


def chain_order_polytope(mp, pi_prime):
    return Polytope._wrap(_polymut.chain_order_polytope(_dump(mp), list(pi_prime)))


def transfer(mp, pi_prime, x):
    return tuple(_load(_polymut.transfer(_dump(mp), list(pi_prime), _dump(list(x)))))


def admissible_u(mp):
    return tuple(_load(_polymut.admissible_u(_dump(mp))))


def transfer_factorization(mp):
    out = _load(_polymut.transfer_factorization(_dump(mp)))
    out["expected"] = [Polytope(_dump(p)) for p in out["expected"]]
    return out


def counterexample_witness(lam):
    return _load(_polymut.counterexample_witness(_dump(list(lam))))
