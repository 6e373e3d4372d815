"""Cohomological-induction bookkeeping for theta-stable Levi data.

A Levi datum is a product of unitary groups U(p_i, q_i), one per
discrete block counted with multiplicity, times a smaller group of the
same kind.  The inducing character on the unitary factors is det^{t_i~}
with the shifts t_i~ determined by the parameter; the opaque label sigma
stands for the weakly unipotent representation on the residual factor
and only carries its infinitesimal character.  The module enumerates the
data allowed by a real form, evaluates good/weakly-fair range tests
against the nilradical, runs the filtration-vanishing verifier behind
the translation theorem, and translates packets entry by entry with
characters transported through the component-group quotient.

Coordinate layout is fixed once and for all: unitary-factor coordinates
first, in block order, then the residual-factor coordinates; the
nilradical consists of the positive roots outside the Levi under this
order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .params import (
    ArthurParameter,
    ClassicalGroup,
    InfChar,
    ParameterError,
    ParityError,
    QuotientMap,
    arthur_parameter,
    component_group,
    domination_offsets,
    good_parity,
    inf_char,
    quotient_map,
)
from .weyl import GroupType, Weight, is_dominant, norm_sq, pairing

__all__ = [
    "LeviDatum",
    "Sigma",
    "default_sigma",
    "AqDatum",
    "aq_datum",
    "PacketData",
    "packet_data",
    "enumerate_levis",
    "lambda_tilde",
    "lambda_tilde_fractions",
    "nilradical_roots",
    "delta_u",
    "RangeResult",
    "range_check",
    "FiltrationItem",
    "FiltrationReport",
    "filtration_vanishing",
    "TranslatedPacket",
    "translate_packet",
    "evaluate_at",
    "FILTRATION_STATE_CAP",
]

# Explicit filtration sweeps stop growing the monoid beyond this many
# states; the root-level certificates cover every height exactly.
FILTRATION_STATE_CAP = 50_000


@dataclass(frozen=True)
class LeviDatum:
    """x U(p_i, q_i) x G_0 with G_0 of the same kind as the ambient group."""

    unitary_factors: tuple[tuple[int, int], ...]
    g0: ClassicalGroup

    @property
    def a_list(self) -> tuple[int, ...]:
        return tuple(p + q for p, q in self.unitary_factors)

    def __str__(self) -> str:
        factors = [f"U({p},{q})" for p, q in self.unitary_factors]
        factors.append(str(self.g0))
        return "x".join(factors)


@dataclass(frozen=True)
class Sigma:
    """Opaque label for the representation on the residual factor."""

    label: str
    nu_sigma: InfChar | None = None
    weakly_unipotent: bool = True


def default_sigma(psi: ArthurParameter, g0: ClassicalGroup) -> Sigma:
    """Sigma attached to the unipotent part of the parameter."""
    unip = psi.unipotent
    if g0.rank == 0 and not unip:
        return Sigma("sigma", None)
    psi_u = arthur_parameter(ClassicalGroup(g0.kind, g0.rank), unip)
    return Sigma("sigma", inf_char(psi_u, "G"))


@dataclass(frozen=True)
class AqDatum:
    """Bookkeeping datum for one cohomologically induced module.

    ``t_tilde`` lists the integer character exponents on the unitary
    factors; ``lambda_L`` concatenates those exponents (each repeated by
    the factor size) with the residual infinitesimal character.
    """

    levi: LeviDatum
    t_tilde: tuple[int, ...]
    sigma: Sigma
    lambda_L: Weight

    def label(self) -> str:
        shifts = ",".join(str(t) for t in self.t_tilde)
        return f"Aq[{self.levi}; t~=({shifts}); {self.sigma.label}]"

    def __str__(self) -> str:
        return self.label()


def _lambda_l(levi: LeviDatum, t_tilde: Iterable[int], sigma: Sigma) -> Weight:
    coords: list[int] = []
    for t, a in zip(t_tilde, levi.a_list):
        coords.extend([2 * t] * a)
    if sigma.nu_sigma is not None:
        coords.extend(sigma.nu_sigma.doubled)
    else:
        coords.extend([0] * levi.g0.rank)
    return Weight(tuple(coords))


def aq_datum(psi: ArthurParameter, levi: LeviDatum, sigma: Sigma | None = None) -> AqDatum:
    shifts = lambda_tilde(psi)
    if len(shifts) != len(levi.unitary_factors):
        raise ParameterError("Levi factor count does not match the discrete blocks")
    if sigma is None:
        sigma = default_sigma(psi, levi.g0)
    return AqDatum(levi, tuple(shifts), sigma, _lambda_l(levi, shifts, sigma))


@dataclass(frozen=True)
class PacketData:
    """Packet bookkeeping: pairs (datum, character of A(psi))."""

    psi: ArthurParameter
    entries: tuple[tuple[AqDatum, tuple[int, ...]], ...]


def packet_data(
    psi: ArthurParameter, entries: Iterable[tuple[AqDatum, Iterable[int]]]
) -> PacketData:
    group = component_group(psi)
    canon = tuple(
        (datum, group.canonical_character(tuple(values))) for datum, values in entries
    )
    return PacketData(psi, canon)


def enumerate_levis(psi: ArthurParameter, group: ClassicalGroup | None = None) -> list[LeviDatum]:
    """All Levi data consistent with the real form's signature.

    Each discrete block of size a contributes a factor U(p, q) with
    p + q = a; orthogonal signatures must stay non-negative after
    removing the 2p's and 2q's.  Deterministic lexicographic order in
    the p-vector.
    """
    if not good_parity(psi).ok:
        raise ParityError("Levi enumeration requires good parity")
    g = psi.group if group is None else group
    disc = psi.discrete
    a_list = [a for _t2, a in disc]
    n0 = g.rank - sum(a_list)
    if n0 < 0:
        raise ParameterError("discrete blocks exceed the rank")
    out: list[LeviDatum] = []
    for ps in itertools.product(*(range(a + 1) for a in a_list)):
        factors = tuple((p, a - p) for p, a in zip(ps, a_list))
        if g.kind == "Sp":
            g0 = ClassicalGroup("Sp", n0)
        else:
            if g.signature is None:
                raise ParameterError("Levi enumeration for SO kinds needs a signature")
            p_big, q_big = g.signature
            p0 = p_big - 2 * sum(p for p, _q in factors)
            q0 = q_big - 2 * sum(q for _p, q in factors)
            if p0 < 0 or q0 < 0:
                continue
            g0 = ClassicalGroup(g.kind, n0, (p0, q0))
        out.append(LeviDatum(factors, g0))
    if not out:
        raise ParameterError(f"no Levi datum is compatible with the signature of {g}")
    return out


def lambda_tilde_fractions(psi: ArthurParameter, group: ClassicalGroup | None = None) -> list[Fraction]:
    """The character shifts t_i~ as exact fractions, no integrality check."""
    g = psi.group if group is None else group
    disc = psi.discrete
    a_list = [a for _t2, a in disc]
    n0 = g.rank - sum(a_list)
    if n0 < 0:
        raise ParameterError("discrete blocks exceed the rank")
    out = []
    for i, (t2, a) in enumerate(disc):
        tail = sum(a_list[i + 1 :])
        out.append(Fraction(t2, 2) + Fraction(a - 1, 2) + g.epsilon_g + tail + n0)
    return out


def lambda_tilde(psi: ArthurParameter, group: ClassicalGroup | None = None) -> list[int]:
    """t_i~ = t_i + (a_i - 1)/2 + eps_G + sum_{j>i} a_j + n_0, all integers.

    Integrality of every shift is exactly the good-parity criterion; a
    fractional value raises ParityError.
    """
    out = []
    for i, v in enumerate(lambda_tilde_fractions(psi, group)):
        if v.denominator != 1:
            raise ParityError(f"t~_{i + 1} = {v} is not an integer (bad parity)")
        out.append(int(v))
    return out


def _layout(levi: LeviDatum) -> tuple[tuple[int, ...], int, str]:
    return levi.a_list, levi.g0.rank, levi.g0.kind


def _block_ranges(a_list: tuple[int, ...]) -> list[range]:
    out = []
    start = 0
    for a in a_list:
        out.append(range(start, start + a))
        start += a
    return out


def nilradical_roots(a_list: tuple[int, ...], n0: int, kind: str) -> list[Weight]:
    """Positive roots outside the Levi, in the fixed coordinate layout."""
    n = sum(a_list) + n0
    blocks = _block_ranges(a_list)
    g0_range = range(n - n0, n)
    roots: list[Weight] = []

    def vec(pairs) -> Weight:
        d = [0] * n
        for idx, val in pairs:
            d[idx] = val
        return Weight(tuple(d))

    for bi, blk in enumerate(blocks):
        for s in blk:
            # within the block only e_s + e_t leaves the gl(a_i) factor
            for t in blk:
                if t > s:
                    roots.append(vec([(s, 2), (t, 2)]))
            for later in blocks[bi + 1 :]:
                for t in later:
                    roots.append(vec([(s, 2), (t, -2)]))
                    roots.append(vec([(s, 2), (t, 2)]))
            for t in g0_range:
                roots.append(vec([(s, 2), (t, -2)]))
                roots.append(vec([(s, 2), (t, 2)]))
            if kind == "Sp":
                roots.append(vec([(s, 4)]))
            elif kind == "SOodd":
                roots.append(vec([(s, 2)]))
    return roots


def delta_u(a_list: tuple[int, ...], n0: int, kind: str) -> Weight:
    """Half sum of the nilradical roots; constant on each unitary block,
    zero on the residual coordinates."""
    n = sum(a_list) + n0
    total = [0] * n
    for r in nilradical_roots(a_list, n0, kind):
        for i, v in enumerate(r.doubled):
            total[i] += v
    if any(v % 2 for v in total):
        raise RuntimeError("half sum is not half-integral")
    return Weight(tuple(v // 2 for v in total))


_G0_FAMILY = {"Sp": "C", "SOodd": "B", "SOeven": "D"}


def _dominant_for_levi(mu_doubled: tuple[int, ...], a_list: tuple[int, ...], n0: int, kind: str) -> bool:
    blocks = _block_ranges(a_list)
    for blk in blocks:
        for s in blk[:-1]:
            if mu_doubled[s] < mu_doubled[s + 1]:
                return False
    if n0 == 0:
        return True
    tail = Weight(mu_doubled[len(mu_doubled) - n0 :])
    return is_dominant(GroupType(_G0_FAMILY[kind], n0), tail)


@dataclass(frozen=True)
class RangeResult:
    verdict: str  # good | weakly_fair | neither
    min_pairing: Fraction | None

    def __str__(self) -> str:
        return self.verdict


def range_check(d: AqDatum) -> RangeResult:
    """Good/weakly-fair classification against the nilradical roots.

    The tested vector places t_i~ - delta(u)_i on the coordinates of the
    i-th unitary factor (the character parameter normalized so that the
    induced module keeps the parameter's infinitesimal character) and
    zero on the residual factor; good means every pairing with a
    nilradical root is positive, weakly fair allows zeros.
    """
    a_list, n0, kind = _layout(d.levi)
    roots = nilradical_roots(a_list, n0, kind)
    if not roots:
        return RangeResult("good", None)
    du = delta_u(a_list, n0, kind)
    coords: list[int] = []
    pos = 0
    for t, a in zip(d.t_tilde, a_list):
        for _ in range(a):
            coords.append(2 * t - du.doubled[pos])
            pos += 1
    coords.extend([0] * n0)
    x = Weight(tuple(coords))
    worst = min(pairing(x, r) for r in roots)
    if worst > 0:
        verdict = "good"
    elif worst == 0:
        verdict = "weakly_fair"
    else:
        verdict = "neither"
    return RangeResult(verdict, worst)


@dataclass(frozen=True)
class FiltrationItem:
    mu: Weight
    mu1: Weight
    norm_with: Fraction
    norm_without: Fraction
    pairing_lambda: Fraction
    pairing_delta: Fraction

    @property
    def ok(self) -> bool:
        return (
            self.norm_with > self.norm_without
            and self.pairing_lambda >= 0
            and self.pairing_delta >= 0
        )


@dataclass(frozen=True)
class FiltrationReport:
    """Outcome of the vanishing sweep for one datum.

    The two certificates are root-level facts that bound every layer of
    the filtration at once: every nilradical root pairs non-negatively
    with the translated character, and every nilradical root has positive
    unitary support (so mu_1 = 0 forces mu = 0).  The explicit items
    re-verify the norm expansion on the enumerated layers.
    """

    height_bound: int
    enumerated: int
    dominant_count: int
    items: tuple[FiltrationItem, ...]
    violations: tuple[FiltrationItem, ...]
    truncated: bool
    cert_weight_pairing: bool
    cert_unitary_support: bool

    @property
    def passed(self) -> bool:
        return not self.violations and self.cert_weight_pairing and self.cert_unitary_support


def _monoid_sums(
    roots: list[tuple[int, ...]], max_height: int, cap: int
) -> tuple[list[tuple[int, ...]], bool]:
    n = len(roots[0]) if roots else 0
    zero = (0,) * n
    seen = {zero}
    frontier = [zero]
    truncated = False
    for _h in range(max_height):
        if truncated or not frontier:
            break
        nxt = []
        for x in sorted(frontier):
            for r in roots:
                y = tuple(a + b for a, b in zip(x, r))
                if y not in seen:
                    if len(seen) > cap:
                        truncated = True
                        break
                    seen.add(y)
                    nxt.append(y)
            if truncated:
                break
        frontier = nxt
    return sorted(seen), truncated


def filtration_vanishing(
    d_plus: AqDatum,
    psi: ArthurParameter,
    height_bound: int | None = None,
    state_cap: int = FILTRATION_STATE_CAP,
) -> FiltrationReport:
    """Verify the norm-increase behind the filtration vanishing argument.

    Enumerates non-negative integer combinations mu of nilradical roots
    (height = number of roots summed) up to the bound, keeps those
    dominant for the Levi, and checks for every mu with nonzero unitary
    part mu_1 that |lambda + mu_1 + delta_L1|^2 strictly exceeds
    |lambda + delta_L1|^2, reporting the two pairing terms of the
    expansion separately.  lambda is the translated character for psi.
    The default bound is the largest coordinate of the good-range
    character (weights appearing in its restriction cannot exceed it).
    """
    if range_check(d_plus).verdict != "good":
        raise ParameterError("filtration sweep requires a good-range datum")
    a_list, n0, kind = _layout(d_plus.levi)
    shifts = lambda_tilde(psi)
    if len(shifts) != len(a_list):
        raise ParameterError("parameter does not match the Levi datum")
    if height_bound is None:
        height_bound = max(d_plus.t_tilde, default=0)

    n_u = sum(a_list)
    lam_u = Weight(tuple(2 * t for t, a in zip(shifts, a_list) for _ in range(a)))
    delta_l1 = Weight(tuple((a - 1) - 2 * k for a in a_list for k in range(a)))
    roots = nilradical_roots(a_list, n0, kind)

    # root-level certificates, covering every height at once: the
    # translated character pairs >= 0 with each nilradical root, and a
    # strictly positive block grading (decreasing over the unitary
    # factors, zero on the residual) shows mu != 0 forces mu_1 != 0
    lam_ext = Weight(lam_u.doubled + (0,) * n0)
    cert_pairing = all(pairing(lam_ext, r) >= 0 for r in roots)
    v = len(a_list)
    grade = [v - i for i, a in enumerate(a_list) for _ in range(a)] + [0] * n0
    cert_support = all(
        sum(g * c for g, c in zip(grade, r.doubled)) > 0 for r in roots
    )

    base = lam_u + delta_l1
    base_norm = norm_sq(base)
    base_d = base.doubled
    lam_d = lam_u.doubled
    delta_d = delta_l1.doubled
    base_norm4 = sum(v * v for v in base_d)
    items: list[FiltrationItem] = []
    violations: list[FiltrationItem] = []
    enumerated = 0
    dominant_count = 0
    truncated = False
    if roots:
        sums, truncated = _monoid_sums([r.doubled for r in roots], height_bound, state_cap)
        block_spans = [(r.start, r.stop) for r in _block_ranges(a_list)]
        g0_type = GroupType(_G0_FAMILY[kind], n0) if n0 else None
        for mu_d in sums:
            if not any(mu_d):
                continue  # the surviving bottom layer
            enumerated += 1
            # dominance for the Levi: non-increasing within each gl block,
            # dominant for the residual root system on the tail
            ok_dom = all(
                mu_d[s] >= mu_d[s + 1] for lo, hi in block_spans for s in range(lo, hi - 1)
            )
            if ok_dom and g0_type is not None:
                ok_dom = is_dominant(g0_type, Weight(mu_d[len(mu_d) - n0 :]))
            if not ok_dom:
                continue
            dominant_count += 1
            mu1_d = mu_d[:n_u]
            # all comparisons in doubled-integer arithmetic (4x the values)
            with4 = sum((b + m) * (b + m) for b, m in zip(base_d, mu1_d))
            pl4 = sum(a * b for a, b in zip(lam_d, mu1_d))
            pd4 = sum(a * b for a, b in zip(delta_d, mu1_d))
            ok = with4 > base_norm4 and pl4 >= 0 and pd4 >= 0
            if not ok or len(items) < 500:
                item = FiltrationItem(
                    mu=Weight(mu_d),
                    mu1=Weight(mu1_d),
                    norm_with=Fraction(with4, 4),
                    norm_without=base_norm,
                    pairing_lambda=Fraction(pl4, 4),
                    pairing_delta=Fraction(pd4, 4),
                )
                if len(items) < 500:
                    items.append(item)
                if not ok:
                    violations.append(item)
    return FiltrationReport(
        height_bound=height_bound,
        enumerated=enumerated,
        dominant_count=dominant_count,
        items=tuple(items),
        violations=tuple(violations),
        truncated=truncated,
        cert_weight_pairing=cert_pairing,
        cert_unitary_support=cert_support,
    )


@dataclass(frozen=True)
class TranslatedPacket:
    """Packet for psi, plus the entries dropped by kernel vanishing."""

    packet: PacketData
    vanishing: tuple[tuple[AqDatum, tuple[int, ...]], ...]
    quotient: QuotientMap

    @property
    def kernel_order(self) -> int:
        return self.quotient.kernel_order


def translate_packet(packet_plus: PacketData, psi: ArthurParameter) -> TranslatedPacket:
    """Translate a packet for a dominating parameter down to psi.

    Every datum must be in the good range; its shifts are replaced by the
    psi-side shifts and its character is transported through the quotient
    A(psi_+) -> A(psi).  Entries whose character is nontrivial on the
    kernel acquire a vanishing annotation and are dropped.
    """
    psi_plus = packet_plus.psi
    domination_offsets(psi, psi_plus)
    qm = quotient_map(psi_plus, psi)
    shifts_plus = lambda_tilde(psi_plus)
    shifts = lambda_tilde(psi)
    entries = []
    dropped = []
    for datum, values in packet_plus.entries:
        if list(datum.t_tilde) != shifts_plus:
            raise ParameterError(
                f"entry shifts {datum.t_tilde} do not match the dominating parameter"
            )
        if range_check(datum).verdict != "good":
            raise ParameterError(f"{datum.label()} is not in the good range")
        pushed = qm.push_character(values)
        new_datum = AqDatum(
            levi=datum.levi,
            t_tilde=tuple(shifts),
            sigma=datum.sigma,
            lambda_L=_lambda_l(datum.levi, shifts, datum.sigma),
        )
        if pushed is None:
            dropped.append((new_datum, values))
        else:
            entries.append((new_datum, pushed))
    return TranslatedPacket(PacketData(psi, tuple(entries)), tuple(dropped), qm)


def evaluate_at(packet: PacketData, s: Iterable[int]) -> dict[str, int]:
    """Evaluate the packet's characters at s: sum of eps(s) * label."""
    group = component_group(packet.psi)
    s = tuple(s)
    if s not in group:
        raise ParameterError(f"{s} is not an element of A(psi)")
    out: dict[str, int] = {}
    for datum, values in packet.entries:
        label = datum.label()
        out[label] = out.get(label, 0) + group.evaluate(values, s)
    return dict(sorted(out.items()))
