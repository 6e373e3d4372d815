"""The twisted diagonal torus of GL(n) and extremal-weight trace identities.

The pinned outer automorphism acts on the torus by theta(t)_i =
1/t_{n+1-i}; the norm map projects onto the theta-coinvariants, which is
a maximal torus of the endoscopic group.  A theta-invariant dominant
weight mu gives a twisted action on the sum of its extremal weight
lines, normalized so theta fixes the highest-weight line, and the
twisted trace of that action matches the symmetrized character of the
endoscopic side evaluated through the norm map.  The checks here verify
this numerically on random regular elements of the unit torus, and
verify exactly that Kostant representatives of theta-stable cosets are
theta-fixed.
"""

from __future__ import annotations

import cmath
import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .weyl import Weight

__all__ = [
    "TwistedTorusElement",
    "torus_element",
    "theta_weight",
    "theta_perm",
    "ThetaFixedWeyl",
    "theta_fixed_weyl",
    "norm_map",
    "ExtremalRep",
    "extremal_rep",
    "twisted_trace_extremal",
    "kostant_theta_invariance",
    "TransferIdentityReport",
    "verify_transfer_identity",
    "theta_invariant_dominant_weights",
]


@dataclass(frozen=True)
class TwistedTorusElement:
    """Diagonal torus element t; the twisted element is t x theta."""

    entries: tuple[complex, ...]

    def __post_init__(self) -> None:
        if any(e == 0 for e in self.entries):
            raise ValueError("torus entries must be nonzero")

    @property
    def n(self) -> int:
        return len(self.entries)

    def is_regular(self, tol: float = 1e-8) -> bool:
        """Sufficient desk-scale regularity: the norm coordinates are
        pairwise distinct and different from +-1."""
        vals = norm_map(self)
        for i, v in enumerate(vals):
            if abs(v - 1) < tol or abs(v + 1) < tol:
                return False
            for w in vals[i + 1 :]:
                if abs(v - w) < tol:
                    return False
        return True


def torus_element(entries: Iterable[complex]) -> TwistedTorusElement:
    return TwistedTorusElement(tuple(complex(e) for e in entries))


def norm_map(t: TwistedTorusElement) -> tuple[complex, ...]:
    """N(t)_i = t_i / t_{n+1-i} for i up to floor(n/2)."""
    n = t.n
    return tuple(t.entries[i] / t.entries[n - 1 - i] for i in range(n // 2))


def theta_weight(x: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-v for v in reversed(x))


def theta_perm(p: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation by the longest element: the theta-action on S_n."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


@dataclass(frozen=True)
class ThetaFixedWeyl:
    """The subgroup of S_n fixed by theta, with its signed-permutation model.

    ``signed_images`` maps each fixed permutation to a signed permutation
    of the first floor(n/2) letters; this exhibits the isomorphism with
    the hyperoctahedral group of that rank.
    """

    n: int
    elements: tuple[tuple[int, ...], ...]
    signed_images: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def _signed_image(p: tuple[int, ...], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    m = n // 2
    perm = [0] * m
    signs = [1] * m
    for i in range(m):
        j = p[i]
        if j < m:
            perm[i] = j
        else:
            perm[i] = n - 1 - j
            signs[i] = -1
    return tuple(perm), tuple(signs)


def theta_fixed_weyl(n: int) -> ThetaFixedWeyl:
    if n < 1:
        raise ValueError("n must be >= 1")
    fixed = [p for p in itertools.permutations(range(n)) if theta_perm(p) == p]
    fixed.sort()
    images = tuple((p, _signed_image(p, n)) for p in fixed)
    return ThetaFixedWeyl(n, tuple(fixed), tuple((p, im) for p, im in images))


def _check_twistable(n: int, mu: Weight) -> tuple[int, ...]:
    if len(mu) != n:
        raise ValueError("weight length must equal n")
    if any(d % 2 for d in mu.doubled):
        raise ValueError("GL weights must have integer coordinates")
    x = tuple(d // 2 for d in mu.doubled)
    if any(x[i] < x[i + 1] for i in range(n - 1)):
        raise ValueError("weight must be dominant (non-increasing)")
    if theta_weight(x) != x:
        raise ValueError("weight must be theta-invariant")
    return x


def _coset_rep_for_weight(mu: tuple[int, ...], target: tuple[int, ...]) -> tuple[int, ...]:
    """Minimal-length w with w.mu = target: positions of equal values are
    matched in increasing order."""
    n = len(mu)
    slots: dict[int, list[int]] = {}
    for j in range(n):
        slots.setdefault(target[j], []).append(j)
    taken = {v: 0 for v in slots}
    w = [0] * n
    for i in range(n):
        v = mu[i]
        w[i] = slots[v][taken[v]]
        taken[v] += 1
    return tuple(w)


def _extremal_weights(mu: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    seen = set()
    for p in itertools.permutations(mu):
        if p not in seen:
            seen.add(p)
            yield p


@dataclass(frozen=True)
class ExtremalRep:
    """Extremal-weight twisted representation data for a dominant mu.

    ``extremal_cosets`` holds the theta-fixed cosets of W/W_mu as pairs
    (Kostant representative, extremal weight); only these lines carry a
    nonzero twisted trace.
    """

    n: int
    mu: Weight
    extremal_cosets: tuple[tuple[tuple[int, ...], Weight], ...]


def extremal_rep(n: int, mu: Weight) -> ExtremalRep:
    x = _check_twistable(n, mu)
    cosets = []
    for target in _extremal_weights(x):
        if theta_weight(target) != target:
            continue
        rep = _coset_rep_for_weight(x, target)
        cosets.append((rep, Weight(tuple(2 * v for v in target))))
    cosets.sort(key=lambda rw: rw[1].doubled, reverse=True)
    return ExtremalRep(n, mu, tuple(cosets))


def _char_value(entries: tuple[complex, ...], exponents: tuple[int, ...]) -> complex:
    out = 1.0 + 0.0j
    for e, k in zip(entries, exponents):
        if k:
            out *= e**k
    return out


def twisted_trace_extremal(rep: ExtremalRep, t: TwistedTorusElement) -> complex:
    """Twisted trace on the sum of extremal weight lines.

    Theta acts trivially on every theta-fixed extremal line, so the trace
    is the sum of the fixed extremal characters at t; non-fixed lines are
    permuted off the diagonal and contribute zero.
    """
    if t.n != rep.n:
        raise ValueError("torus element length mismatch")
    total = 0.0 + 0.0j
    for _rep, w in rep.extremal_cosets:
        total += _char_value(t.entries, tuple(d // 2 for d in w.doubled))
    return total


def kostant_theta_invariance(n: int, mu: Weight) -> bool:
    """Check theta(w) = w for the Kostant representative of every
    theta-stable coset of W/W_mu.  Exact; returns True iff all pass."""
    x = _check_twistable(n, mu)
    for target in _extremal_weights(x):
        if theta_weight(target) != target:
            continue
        rep = _coset_rep_for_weight(x, target)
        if theta_perm(rep) != rep:
            return False
    return True


def _signed_orbit(nu: tuple[int, ...], k: int) -> list[tuple[int, ...]]:
    """Orbit of nu under signed permutations of the first k coordinates."""
    m = len(nu)
    head, tail = nu[:k], nu[k:]
    out = set()
    for p in itertools.permutations(head):
        for signs in itertools.product((1, -1), repeat=k):
            out.add(tuple(s * v for s, v in zip(signs, p)) + tail)
    return sorted(out)


@dataclass(frozen=True)
class TransferIdentityReport:
    n: int
    endo_rank: int
    principal: bool
    trials: int
    seed: int
    max_residual: float


def verify_transfer_identity(
    mu: Weight,
    endo_rank: int | None = None,
    trials: int = 100,
    seed: int = 0,
) -> TransferIdentityReport:
    """Numerically compare the twisted extremal trace with the symmetrized
    endoscopic character through the norm map.

    nu is the first floor(n/2) coordinates of mu; the declared endoscopic
    Weyl group is the signed permutations of the first ``endo_rank``
    norm coordinates (the principal case takes all of them, and the
    identity is exact there).  Random trials draw unit-modulus regular
    torus elements from the given seed; the maximum absolute residual
    over the trials is reported.
    """
    n = len(mu)
    x = _check_twistable(n, mu)
    m = n // 2
    k = m if endo_rank is None else endo_rank
    if not 0 <= k <= m:
        raise ValueError(f"endo_rank must be between 0 and {m}")
    rep = extremal_rep(n, mu)
    nu = x[:m]
    orbit_exps = _signed_orbit(nu, k)
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(trials):
        t = _random_regular(rng, n)
        lhs = twisted_trace_extremal(rep, t)
        nt = norm_map(t)
        rhs = sum(_char_value(nt, e) for e in orbit_exps)
        worst = max(worst, abs(lhs - rhs))
    return TransferIdentityReport(
        n=n, endo_rank=k, principal=(k == m), trials=trials, seed=seed, max_residual=worst
    )


def _random_regular(rng: random.Random, n: int, attempts: int = 1000) -> TwistedTorusElement:
    for _ in range(attempts):
        t = TwistedTorusElement(
            tuple(cmath.exp(2j * cmath.pi * rng.random()) for _ in range(n))
        )
        if n < 2 or t.is_regular(tol=1e-6):
            return t
    raise RuntimeError("could not sample a regular torus element")


def theta_invariant_dominant_weights(n: int, max_entry: int) -> Iterator[Weight]:
    """All theta-invariant dominant integral weights with entries bounded
    by max_entry; the free choice is the non-increasing non-negative head."""
    m = n // 2
    for head in itertools.combinations_with_replacement(range(max_entry, -1, -1), m):
        coords = list(head)
        if n % 2:
            coords.append(0)
        coords.extend(-v for v in reversed(head))
        yield Weight(tuple(2 * v for v in coords))
