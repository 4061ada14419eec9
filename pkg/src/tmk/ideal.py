"""Superpotentials, Jacobian ideals and the chamber containment check.

The containment ``I <= sqrt(<dw> + J)`` is decided two ways.  The first
asks a Groebner engine directly.  The second checks a chain of explicit
polynomial identities for the main two-bracket superpotential; each link
is an identity verified by expansion, and the links compose by the usual
closure rules of radical ideals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence

from .exact import as_rat, dot
from .groebner import (GroebnerBudgetExceeded, Ideal, normal_form,
                       radical_membership)
from .poly import MonomialIdeal, Polynomial, Ring, monomial_str


class InvalidLambda(ValueError):
    pass


class PointNotInDualCone(ValueError):
    pass


@dataclass(frozen=True)
class LambdaParam:
    value: Fraction

    def __post_init__(self):
        v = as_rat(self.value)
        object.__setattr__(self, "value", v)
        if v == 0 or v ** 6 == 1:
            raise InvalidLambda(f"lambda = {v} has lambda^6 in {{0, 1}}")

    @classmethod
    def parse(cls, text: str) -> "LambdaParam":
        try:
            return cls(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, InvalidLambda):
                raise
            raise InvalidLambda(f"not a rational number: {text!r}") from exc

    def __str__(self):
        return str(self.value)


MAIN_VARS = tuple(f"x{i}" for i in range(12)) + ("u1", "u2")


def main_ring(order: str = "grevlex") -> Ring:
    return Ring(MAIN_VARS, order)


def superpotential(points: Sequence[Sequence[int]], rays: Sequence[Sequence[int]],
                   coeffs: Sequence, ring: Ring) -> Polynomial:
    """Sum of ``coeff * prod_j var_j^<m, u_j>`` over the points ``m``."""
    if len(rays) != ring.nvars:
        raise ValueError("one ray per ring variable required")
    if len(coeffs) != len(points):
        raise ValueError("one coefficient per point required")
    out = Polynomial(ring)
    for m, c in zip(points, coeffs):
        expo = tuple(dot(m, u) for u in rays)
        if any(e < 0 for e in expo):
            raise PointNotInDualCone(f"point {tuple(m)} pairs negatively with a ray")
        out = out + ring.monomial(expo, c)
    return out


def standard_coefficients(points: Sequence[Sequence[int]], base_dim: int,
                          cross: Fraction) -> list[Fraction]:
    """1 on every point except those with zero lattice part, which get ``cross``."""
    return [Fraction(cross) if not any(m[:base_dim]) else Fraction(1) for m in points]


def jacobian_ideal(w: Polynomial) -> Ideal:
    return Ideal(w.ring, [w.diff(i) for i in range(w.ring.nvars)])


# ---------------------------------------------------------------------------
# the Groebner route

@dataclass
class MembershipResult:
    generator: str
    status: str            # pass / fail / undecided
    method: str
    detail: dict = field(default_factory=dict)


@dataclass
class ContainmentReport:
    passed: bool
    undecided: bool
    results: list[MembershipResult]

    def to_json(self) -> dict:
        return {"passed": self.passed, "undecided": self.undecided,
                "results": [{"generator": r.generator, "status": r.status,
                             "method": r.method, **r.detail} for r in self.results]}


def _decide(args):
    g, base, budget = args
    try:
        return radical_membership(g, base, budget), None
    except GroebnerBudgetExceeded as exc:
        return None, exc.pairs


def chamber_containment_check(I: MonomialIdeal, J: MonomialIdeal, w: Polynomial,
                              budget: Optional[int] = None, jobs: int = 1) -> ContainmentReport:
    """Check every minimal generator of ``I`` against ``sqrt(<dw> + J)``.

    With ``jobs > 1`` the Groebner runs go to a process pool; results are
    reported in generator order either way.
    """
    if J.is_zero():
        raise ValueError("the second ideal must be nonzero")
    ring = w.ring
    base = Ideal(ring, jacobian_ideal(w).generators + J.polynomials(ring))
    pending = [g for g in I.gens if not J.contains(g)]
    tasks = [(ring.monomial(g), base, budget) for g in pending]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = dict(zip(pending, pool.map(_decide, tasks)))
    else:
        outcomes = dict(zip(pending, map(_decide, tasks)))
    results = []
    for g in I.gens:
        name = monomial_str(ring, g)
        if g not in outcomes:
            results.append(MembershipResult(name, "pass", "in J"))
            continue
        ok, pairs = outcomes[g]
        if ok is None:
            results.append(MembershipResult(name, "undecided", "rabinowitsch", {"pairs": pairs}))
        else:
            results.append(MembershipResult(name, "pass" if ok else "fail", "rabinowitsch"))
    undecided = any(r.status == "undecided" for r in results)
    passed = all(r.status == "pass" for r in results)
    return ContainmentReport(passed, undecided, results)


def key_monomial_cover(g: Polynomial, ring: Optional[Ring] = None) -> Optional[str]:
    """A key monomial dividing the monomial ``g``, if there is one.

    Each key monomial lies in the radical of ``<dw>`` by the certificate
    chain, so any multiple of one lies there too.
    """
    ring = ring or g.ring
    (e,) = g.terms
    for k in key_monomials(ring):
        (ke,) = k.terms
        if all(a <= b for a, b in zip(ke, e)):
            return str(k)
    return None


# ---------------------------------------------------------------------------
# explicit certificates for the main superpotential

@dataclass
class Identity:
    name: str
    holds: bool
    kind: str
    detail: str = ""


@dataclass
class CertificateReport:
    identities: list[Identity]
    errata: list[Identity]
    members: dict[str, str]

    @property
    def passed(self) -> bool:
        return all(i.holds for i in self.identities)

    def failures(self) -> list[str]:
        return [i.name for i in self.identities if not i.holds]

    def to_json(self) -> dict:
        row = lambda i: {"name": i.name, "holds": i.holds, "kind": i.kind, "detail": i.detail}
        return {"passed": self.passed,
                "identities": [row(i) for i in self.identities],
                "errata": [row(i) for i in self.errata],
                "radical_members": self.members}


def main_superpotential(lam: LambdaParam, ring: Optional[Ring] = None) -> Polynomial:
    ring = ring or main_ring()
    text = ("u1*x0^3*x6^3 + u1*x1^3*x7^3 + u1*x2^3*x8^3 - 3*lambda*u1*x3*x4*x5*x6*x7*x8"
            " + u2*x3^3*x9^3 + u2*x4^3*x10^3 + u2*x5^3*x11^3 - 3*lambda*u2*x0*x1*x2*x9*x10*x11")
    return ring.parse(text, {"lambda": lam.value})


def _swap() -> dict[str, str]:
    out = {"u1": "u2", "u2": "u1"}
    for i in range(3):
        out.update({f"x{i}": f"x{i + 3}", f"x{i + 3}": f"x{i}",
                    f"x{i + 6}": f"x{i + 9}", f"x{i + 9}": f"x{i + 6}"})
    return out


def _index_perm(p: Sequence[int]) -> dict[str, str]:
    """Permute the pairs (x_i, x_{6+i}) for i = 0, 1, 2."""
    out = {}
    for i, j in enumerate(p):
        out[f"x{i}"] = f"x{j}"
        out[f"x{i + 6}"] = f"x{j + 6}"
    return out


def _compose(a: dict, b: dict) -> dict:
    """Apply ``a`` first, then ``b``."""
    names = set(a) | set(b) | set(a.values())
    return {n: b.get(a.get(n, n), a.get(n, n)) for n in names}


def symmetries() -> list[dict[str, str]]:
    """The twelve variable permutations used to transport certificates."""
    out = []
    for p in permutations(range(3)):
        base = _index_perm(p)
        out.append(base)
        out.append(_compose(base, _swap()))
    return out


def key_monomials(ring: Ring) -> list[Polynomial]:
    out = []
    for j in range(3):
        out.append(ring.parse(f"u2*x{j}*x{6 + j}*x9*x10*x11"))
    for j in range(3, 6):
        out.append(ring.parse(f"u1*x{j}*x{6 + j}*x6*x7*x8"))
    return out


def closing_terms(ring: Ring, lam: Fraction, x11_power: int):
    """The four products whose sum should be (u2 x0 x6 x9 x10 x11)^4."""
    p = lambda text: ring.parse(text, {"c": 3 * lam})
    return [
        (p("-u2^3*x1^2*x6*x7^3*x9^3*x10^3*x11^3"), p("u2*x0*x1*x9*x10*x11")),
        (p("-u2^3*x2^2*x6*x8^3*x9^3*x10^3*x11^3"), p("u2*x0*x2*x9*x10*x11")),
        (p(f"c*u2^3*x0*x3*x4*x6^2*x7*x8*x9^4*x10^4*x11^{x11_power}"), p("u2*x5*x11")),
        (p("u2^4*x0*x6*x9^4*x10^4*x11^4"),
         p("x0^3*x6^3 + x1^3*x7^3 + x2^3*x8^3 - c*x3*x4*x5*x6*x7*x8")),
    ]


def certificate_check(w: Polynomial, lam: LambdaParam, flip_sign: Optional[int] = None) -> CertificateReport:
    """Verify the explicit identities placing the key monomials in sqrt(<dw>).

    ``flip_sign`` negates one term of the closing four-term identity, as a
    negative control.
    """
    ring = w.ring
    L = lam.value
    g = {n: w.diff(n) for n in ring.names}
    p = ring.parse
    ids: list[Identity] = []
    members: dict[str, str] = {}

    def record(name, lhs, rhs, kind="expansion", detail=""):
        ok = (lhs - rhs).is_zero()
        ids.append(Identity(name, ok, kind, detail))
        return ok

    # the superpotential itself and its symmetries
    record("superpotential matches the two-bracket form", w, main_superpotential(lam, ring))
    for k, s in enumerate(symmetries()):
        record(f"symmetry {k} fixes w", w.permute(s), w, "invariance")

    # A - B and C - D as explicit combinations of partials
    a = {i: p(f"3*u1*x{i}^2*x{i + 6}^3") for i in range(3)}
    b = {i: 3 * L * p("u2*x0*x1*x2*x9*x10*x11").mul_monomial(
        tuple(-int(ring.names[k] == f"x{i}") for k in range(ring.nvars))) for i in range(3)}
    c_ = {i: p(f"3*u2*x{i}^2*x{i + 6}^3") for i in range(3, 6)}
    d_ = {i: 3 * L * p("u1*x3*x4*x5*x6*x7*x8").mul_monomial(
        tuple(-int(ring.names[k] == f"x{i}") for k in range(ring.nvars))) for i in range(3, 6)}
    for i in range(3):
        record(f"d w / d x{i} = a{i} - b{i}", g[f"x{i}"], a[i] - b[i])
    for i in range(3, 6):
        record(f"d w / d x{i} = c{i} - d{i}", g[f"x{i}"], c_[i] - d_[i])
    A, B = a[0] * a[1] * a[2], b[0] * b[1] * b[2]
    C, D = c_[3] * c_[4] * c_[5], d_[3] * d_[4] * d_[5]
    a_minus_b = g["x0"] * a[1] * a[2] + b[0] * (g["x1"] * a[2] + b[1] * g["x2"])
    c_minus_d = g["x3"] * c_[4] * c_[5] + d_[3] * (g["x4"] * c_[5] + d_[4] * g["x5"])
    record("A - B in <dw>", A - B, a_minus_b)
    record("C - D in <dw>", C - D, c_minus_d)
    M = p("u1^3*u2^3*x0^2*x1^2*x2^2*x3^2*x4^2*x5^2*x6^3*x7^3*x8^3*x9^3*x10^3*x11^3")
    comb_ac_bd = a_minus_b * C + B * c_minus_d
    record("AC - BD = 27^2 (1 - lambda^6) M", comb_ac_bd, (729 * (1 - L ** 6)) * M)
    K = p("x0*x1*x2*x3*x4*x5") * comb_ac_bd / (729 * (1 - L ** 6))
    record("(u1 u2 x0...x11)^3 in <dw>", p("u1*u2*x0*x1*x2*x3*x4*x5*x6*x7*x8*x9*x10*x11") ** 3, K)
    members["u1*u2*x0*x1*x2*x3*x4*x5*x6*x7*x8*x9*x10*x11"] = "cube in <dw>"

    # (u2 x0 x1 x2 x9 x10 x11)^6 in <dw>
    r = p("u2*x0*x1*x2*x9*x10*x11")
    Q = p("u2^3*x0^3*x1^3*x2^3*x9^3*x10^3*x11^3")
    E = p("x0^3*x6^3 + x1^3*x7^3 + x2^3*x8^3")
    y = p("x3*x4*x5*x6*x7*x8")
    y2 = E / (3 * L)
    z = p("u1") * E
    z2 = 3 * L * r
    record("y - y' = -(d w / d u1) / (3 lambda)", y - y2, -g["u1"] / (3 * L))
    record("z - z' = sum_i x_i (d w / d x_i) / 3", z - z2,
           (p("x0") * g["x0"] + p("x1") * g["x1"] + p("x2") * g["x2"]) / 3)
    T = (K - Q * p("u1^3") * (-g["u1"] / (3 * L)) * (y * y + y * y2 + y2 * y2)
         - Q * ((p("x0") * g["x0"] + p("x1") * g["x1"] + p("x2") * g["x2"]) / 3)
         * (z * z + z * z2 + z2 * z2) / (27 * L ** 3))
    record("(u2 x0 x1 x2 x9 x10 x11)^6 in <dw>", r ** 6, T)
    members[str(r)] = "sixth power in <dw>"

    # u1 x2 x8, then u2 x0 x1 x9 x10 x11
    record("u1 x2^3 x8^3 = x2 (d w / d x2) / 3 + lambda r", p("u1*x2^3*x8^3"),
           p("x2") * g["x2"] / 3 + L * r)
    record("(u1 x2 x8)^3 is a multiple of u1 x2^3 x8^3", p("u1*x2*x8") ** 3,
           p("u1^2") * p("u1*x2^3*x8^3"), "divisibility")
    members["u1*x2*x8"] = "cube is a multiple of a radical member"
    record("u2 x0 x1 x9 x10 x11 = (3 u1 x2^2 x8^3 - d w / d x2) / (3 lambda)",
           p("u2*x0*x1*x9*x10*x11"), (3 * p("u1*x2^2*x8^3") - g["x2"]) / (3 * L))
    members["u2*x0*x1*x9*x10*x11"] = "sum of radical members"
    swap12 = _index_perm((0, 2, 1))
    members["u2*x0*x2*x9*x10*x11"] = "image of u2*x0*x1*x9*x10*x11 under a symmetry"
    record("image of u2 x0 x1 x9 x10 x11 under x1<->x2, x7<->x8",
           p("u2*x0*x1*x9*x10*x11").permute(swap12), p("u2*x0*x2*x9*x10*x11"), "symmetry")
    record("image of u1 x2 x8 under the bracket swap", p("u1*x2*x8").permute(_swap()),
           p("u2*x5*x11"), "symmetry")
    members["u2*x5*x11"] = "image of u1*x2*x8 under a symmetry"

    # the closing identity
    target = p("u2*x0*x6*x9*x10*x11") ** 4
    terms = closing_terms(ring, L, 3)
    if flip_sign is not None:
        f, m = terms[flip_sign]
        terms[flip_sign] = (-f, m)
    total = sum((f * m for f, m in terms), Polynomial(ring))
    record("(u2 x0 x6 x9 x10 x11)^4 as a four-term combination", target, total)
    members["u2*x0*x6*x9*x10*x11"] = "fourth power is a combination of radical members"

    # transport to the six key monomials
    base_key = p("u2*x0*x6*x9*x10*x11")
    keys = {str(k) for k in key_monomials(ring)}
    reached = {str(base_key.permute(s)) for s in symmetries()}
    record("symmetries carry u2 x0 x6 x9 x10 x11 to all six key monomials",
           ring.const(int(keys <= reached)), ring.const(1), "symmetry")
    for k in sorted(keys):
        members.setdefault(k, "image of u2*x0*x6*x9*x10*x11 under a symmetry")

    errata = []
    printed = closing_terms(ring, L, 4)
    printed_total = sum((f * m for f, m in printed), Polynomial(ring))
    errata.append(Identity("four-term combination with x11^4 in the third coefficient",
                           (target - printed_total).is_zero(), "expansion",
                           "third term has total degree 25; x11^3 balances the degrees"))
    return CertificateReport(ids, errata, members)


def power_membership(f: Polynomial, gb: Ideal, max_power: int = 6) -> Optional[int]:
    """Smallest ``k <= max_power`` with ``f^k`` in the ideal, if any."""
    g = f
    for k in range(1, max_power + 1):
        if normal_form(g, gb).is_zero():
            return k
        g = g * f
    return None
