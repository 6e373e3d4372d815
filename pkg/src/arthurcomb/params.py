"""Arthur parameters for real classical groups.

A parameter is a formal sum of blocks rho (x) R[a], where rho is a
self-dual character or discrete-series representation of the real Weil
group recorded by its half-integer parameter t >= 0 (plus a sign eta for
t = 0), and R[a] is the a-dimensional SL(2) representation.  The module
computes dimensions, the good-parity criterion, infinitesimal characters
on both the group and the GL side, very-regular dominating parameters,
component groups with their distinguished element, and elliptic
endoscopic splittings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .weyl import GroupType, Weight, dominant_rep

__all__ = [
    "ParameterError",
    "DimensionError",
    "ParityError",
    "DominationError",
    "ClassicalGroup",
    "Block",
    "block",
    "ArthurParameter",
    "arthur_parameter",
    "InfChar",
    "gl_inf_char",
    "g_inf_char",
    "dimension",
    "good_parity",
    "GoodParityReport",
    "inf_char",
    "very_regular_threshold",
    "dominate",
    "canonical_offsets",
    "domination_offsets",
    "ComponentGroup",
    "component_group",
    "QuotientMap",
    "quotient_map",
    "EndoscopicSplit",
    "endoscopic_split",
    "enumerate_parameters",
]


class ParameterError(ValueError):
    pass


class DimensionError(ParameterError):
    pass


class ParityError(ParameterError):
    pass


class DominationError(ParameterError):
    pass


_KINDS = ("Sp", "SOodd", "SOeven")


@dataclass(frozen=True)
class ClassicalGroup:
    """Sp(2n,R) or a real form SO(p,q) of an orthogonal group.

    The signature is optional for the SO kinds; operations that depend on
    the real form (Levi enumeration) require it, the purely dual-side
    operations do not.
    """

    kind: str
    rank: int
    signature: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ParameterError(f"unknown kind {self.kind!r}")
        if self.rank < 0:
            raise ParameterError("rank must be >= 0")
        if self.kind == "Sp":
            if self.signature is not None:
                raise ParameterError("Sp takes no signature")
            return
        if self.signature is not None:
            p, q = self.signature
            if p < 0 or q < 0:
                raise ParameterError("negative signature")
            if p + q != self.space_dim:
                raise ParameterError(
                    f"signature {p}+{q} != {self.space_dim} for {self.kind} rank {self.rank}"
                )

    @property
    def space_dim(self) -> int:
        if self.kind == "Sp":
            return 2 * self.rank
        if self.kind == "SOodd":
            return 2 * self.rank + 1
        return 2 * self.rank

    @property
    def dual_dim(self) -> int:
        """n*: the dimension of the dual group's standard representation."""
        return 2 * self.rank + 1 if self.kind == "Sp" else 2 * self.rank

    @property
    def dual_symplectic(self) -> bool:
        return self.kind == "SOodd"

    @property
    def dual_special_orthogonal(self) -> bool:
        return self.kind in ("Sp", "SOeven")

    @property
    def dual_has_center(self) -> bool:
        # Sp(2n,C) and SO(2n,C) have center {+-1}; SO(2n+1,C) is adjoint
        return self.kind != "Sp"

    @property
    def epsilon_g(self) -> Fraction:
        if self.kind == "SOeven":
            return Fraction(0)
        if self.kind == "SOodd":
            return Fraction(1, 2)
        return Fraction(1)

    @property
    def quasi_split(self) -> bool | None:
        if self.kind == "Sp":
            return True
        if self.signature is None:
            return None
        p, q = self.signature
        return abs(p - q) == 1 if self.kind == "SOodd" else abs(p - q) <= 2

    def gside_type(self) -> GroupType:
        if self.kind == "Sp":
            return GroupType("C", self.rank)
        if self.kind == "SOodd":
            return GroupType("B", self.rank)
        # on the even orthogonal side we always work modulo the outer
        # automorphism, so orbits use the extended group
        return GroupType("D", self.rank, extended=True)

    def __str__(self) -> str:
        if self.kind == "Sp":
            return f"Sp({2 * self.rank},R)"
        if self.signature is not None:
            return f"SO({self.signature[0]},{self.signature[1]})"
        return f"{self.kind}[{self.space_dim}]"


@dataclass(frozen=True)
class Block:
    """One summand rho (x) R[a] with multiplicity.

    ``t2`` is twice the parameter of rho; ``eta`` distinguishes the two
    quadratic characters and is meaningful only when t = 0.
    """

    t2: int
    a: int
    eta: int = 1
    mult: int = 1

    def __post_init__(self) -> None:
        if self.t2 < 0:
            raise ParameterError("t must be >= 0")
        if self.a < 1 or self.mult < 1:
            raise ParameterError("a and mult must be >= 1")
        if self.eta not in (1, -1):
            raise ParameterError("eta must be +1 or -1")
        if self.t2 > 0 and self.eta != 1:
            object.__setattr__(self, "eta", 1)

    @property
    def t(self) -> Fraction:
        return Fraction(self.t2, 2)

    @property
    def rho_dim(self) -> int:
        return 1 if self.t2 == 0 else 2

    @property
    def dim(self) -> int:
        return self.rho_dim * self.a * self.mult

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.t2, self.a, self.eta)

    def __str__(self) -> str:
        if self.t2 == 0:
            rho = "triv" if self.eta == 1 else "sgn"
        else:
            rho = f"I[{Fraction(self.t2, 2)}]"
        s = f"{rho}*R[{self.a}]"
        return s if self.mult == 1 else f"{s}^{self.mult}"


def block(t, a: int, eta=1, mult: int = 1) -> Block:
    """Block from a half-integer t (int, Fraction or ``"p/q"`` string)."""
    t2 = Fraction(t) * 2
    if t2.denominator != 1:
        raise ParameterError(f"{t!r} is not a half-integer")
    if eta in ("+", "+1"):
        eta = 1
    elif eta in ("-", "−", "-1"):
        eta = -1
    return Block(int(t2), a, eta, mult)


@dataclass(frozen=True)
class ArthurParameter:
    """A parameter: group plus canonically sorted multiset of blocks."""

    group: ClassicalGroup
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        total = sum(b.dim for b in self.blocks)
        if total != self.group.dual_dim:
            raise DimensionError(
                f"blocks have total dimension {total}, expected {self.group.dual_dim}"
            )
        keys = [b.key for b in self.blocks]
        if len(set(keys)) != len(keys):
            raise ParameterError("duplicate blocks; merge multiplicities first")
        if keys != sorted(keys, key=lambda k: (-k[0], -k[1], -k[2])):
            raise ParameterError("blocks not in canonical order")

    @property
    def discrete(self) -> tuple[tuple[int, int], ...]:
        """The t > 0 part expanded by multiplicity: pairs (t2, a), t descending."""
        out = []
        for b in self.blocks:
            if b.t2 > 0:
                out.extend([(b.t2, b.a)] * b.mult)
        return tuple(out)

    @property
    def unipotent(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if b.t2 == 0)

    @property
    def v(self) -> int:
        """Number of t > 0 blocks counted with multiplicity."""
        return len(self.discrete)

    def __str__(self) -> str:
        return f"{self.group}: " + " + ".join(str(b) for b in self.blocks)


def arthur_parameter(group: ClassicalGroup, blocks: Iterable[Block]) -> ArthurParameter:
    """Merge equal blocks, sort canonically, and validate the dimension."""
    merged: dict[tuple[int, int, int], int] = {}
    for b in blocks:
        merged[b.key] = merged.get(b.key, 0) + b.mult
    out = [Block(t2, a, eta, m) for (t2, a, eta), m in merged.items()]
    out.sort(key=lambda b: (-b.t2, -b.a, -b.eta))
    return ArthurParameter(group, tuple(out))


def dimension(psi: ArthurParameter) -> int:
    """Total dimension of the representation defined by the blocks."""
    return sum(b.dim for b in psi.blocks)


@dataclass(frozen=True)
class BlockParity:
    block: Block
    ok: bool
    reason: str


@dataclass(frozen=True)
class GoodParityReport:
    ok: bool
    blocks: tuple[BlockParity, ...]

    def __bool__(self) -> bool:
        return self.ok


def _block_parity(group: ClassicalGroup, b: Block) -> BlockParity:
    if b.t2 > 0:
        # t + (a-1)/2 must be an integer unless the group is odd
        # orthogonal, in which case it must be a half-odd integer
        val2 = b.t2 + (b.a - 1)  # twice t + (a-1)/2
        want_odd = group.kind == "SOodd"
        ok = (val2 % 2 == 1) if want_odd else (val2 % 2 == 0)
        kindname = "half-odd" if want_odd else "integral"
        return BlockParity(b, ok, f"t+(a-1)/2 = {Fraction(val2, 2)} {'is' if ok else 'is not'} {kindname}")
    # t = 0: R[a] is orthogonal iff a is odd; the block must match the dual type
    if group.dual_symplectic:
        ok = b.a % 2 == 0
        return BlockParity(b, ok, f"a = {b.a} {'is' if ok else 'is not'} even (symplectic dual)")
    ok = b.a % 2 == 1
    return BlockParity(b, ok, f"a = {b.a} {'is' if ok else 'is not'} odd (orthogonal dual)")


def good_parity(psi: ArthurParameter) -> GoodParityReport:
    """Good parity: every block self-dual of the same type as the dual group."""
    reports = tuple(_block_parity(psi.group, b) for b in psi.blocks)
    return GoodParityReport(all(r.ok for r in reports), reports)


@dataclass(frozen=True)
class InfChar:
    """Infinitesimal character: a Weyl orbit (G side, stored dominant) or a
    negation-symmetric multiset (GL side, stored sorted descending)."""

    side: str
    doubled: tuple[int, ...]
    group_type: GroupType | None = None

    def __post_init__(self) -> None:
        if self.side not in ("G", "GL"):
            raise ParameterError("side must be 'G' or 'GL'")

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    @property
    def weight(self) -> Weight:
        return Weight(self.doubled)

    def __str__(self) -> str:
        body = ",".join(str(Fraction(d, 2)) for d in self.doubled)
        return ("{" + body + "}") if self.side == "GL" else ("(" + body + ")")


def gl_inf_char(doubled: Iterable[int]) -> InfChar:
    entries = tuple(sorted(doubled, reverse=True))
    if tuple(sorted((-d for d in entries), reverse=True)) != entries:
        raise ParameterError("GL-side infinitesimal character must be symmetric under negation")
    return InfChar("GL", entries)


def g_inf_char(group_type: GroupType, w: Weight) -> InfChar:
    dom = dominant_rep(group_type, w)
    return InfChar("G", dom.doubled, group_type)


def _gl_entries(psi: ArthurParameter) -> list[int]:
    out: list[int] = []
    for b in psi.blocks:
        for _ in range(b.mult):
            seg = [b.t2 + (b.a - 1) - 2 * k for k in range(b.a)]
            out.extend(seg)
            if b.t2 > 0:
                out.extend(-x for x in seg)
    return out


def inf_char(psi: ArthurParameter, side: str = "GL") -> InfChar:
    """Infinitesimal character attached to the parameter.

    GL side: the multiset of exponents t_i +- (a_i-1)/2, ..., including
    the mirrored negatives for t > 0 blocks.  G side: the dominant
    representative of the non-negative half, n entries.
    """
    entries = sorted(_gl_entries(psi), reverse=True)
    if side == "GL":
        return gl_inf_char(entries)
    if side != "G":
        raise ParameterError("side must be 'G' or 'GL'")
    n = psi.group.rank
    return g_inf_char(psi.group.gside_type(), Weight(tuple(entries[:n])))


def very_regular_threshold(psi: ArthurParameter) -> int:
    """Concrete meaning of "t'_1 >> ... >> 0": gaps and tail at least n*."""
    return psi.group.dual_dim


def dominate(
    psi: ArthurParameter,
    offsets: Iterable,
    threshold: int | None = None,
) -> ArthurParameter:
    """The dominating parameter psi_+ with t'_i = t_i + T_i.

    Offsets are indexed by the t > 0 blocks counted with multiplicity, in
    descending-t order; they must be non-increasing non-negative integers
    and the resulting t'_i must be strictly decreasing with gaps (and
    tail) at least the very-regular threshold.  Pass ``threshold=0`` to
    build degenerate pairs for diagnostic sweeps.
    """
    if not good_parity(psi).ok:
        raise ParityError("dominate requires a good-parity parameter")
    disc = psi.discrete
    offs = list(offsets)
    if len(offs) != len(disc):
        raise DominationError(
            f"expected {len(disc)} offsets (one per discrete block), got {len(offs)}"
        )
    ts: list[int] = []
    for T in offs:
        f = Fraction(T)
        if f.denominator != 1:
            raise DominationError(f"offset {T!r} is not an integer")
        if f < 0:
            raise DominationError("offsets must be >= 0")
        ts.append(int(f))
    if any(ts[i] < ts[i + 1] for i in range(len(ts) - 1)):
        raise DominationError("offsets must be non-increasing")
    th2 = 2 * (very_regular_threshold(psi) if threshold is None else threshold)
    tp2 = [t2 + 2 * T for (t2, _a), T in zip(disc, ts)]
    for i in range(len(tp2) - 1):
        if tp2[i] - tp2[i + 1] < max(th2, 1):
            raise DominationError(
                f"t'_{i + 1} gap {Fraction(tp2[i] - tp2[i + 1], 2)} below threshold"
            )
    if tp2 and tp2[-1] < th2:
        raise DominationError(f"t'_v = {Fraction(tp2[-1], 2)} below threshold")
    new_blocks = [Block(t2p, a) for t2p, (_t2, a) in zip(tp2, disc)]
    new_blocks.extend(psi.unipotent)
    return arthur_parameter(psi.group, new_blocks)


def canonical_offsets(psi: ArthurParameter, threshold: int | None = None) -> tuple[int, ...]:
    """Smallest valid offsets for ``dominate`` at the given threshold."""
    th2 = 2 * (very_regular_threshold(psi) if threshold is None else threshold)
    disc = psi.discrete
    offs: list[int] = []
    prev_tp2: int | None = None
    for t2, _a in reversed(disc):
        need = th2 if prev_tp2 is None else prev_tp2 + max(th2, 2)
        T2 = max(need - t2, 0)
        T = (T2 + 1) // 2  # round up to an integer offset
        if offs and T < offs[-1]:
            T = offs[-1]
        offs.append(T)
        prev_tp2 = t2 + 2 * T
    return tuple(reversed(offs))


def domination_offsets(psi: ArthurParameter, psi_plus: ArthurParameter) -> tuple[int, ...]:
    """Recover the offsets T_i from a structural domination pair.

    Checks: same group, identical unipotent part, identical a-sequence on
    the discrete part, integral non-negative non-increasing differences.
    """
    if psi_plus.group != psi.group:
        raise DominationError("group mismatch")
    if psi_plus.unipotent != psi.unipotent:
        raise DominationError("unipotent parts differ")
    disc = psi.discrete
    disc_p = psi_plus.discrete
    if len(disc) != len(disc_p):
        raise DominationError("discrete block counts differ")
    if any(a != ap for (_t, a), (_tp, ap) in zip(disc, disc_p)):
        raise DominationError("SL(2) dimensions differ")
    offs = []
    for (t2, _a), (tp2, _ap) in zip(disc, disc_p):
        d2 = tp2 - t2
        if d2 < 0 or d2 % 2:
            raise DominationError(f"offset {Fraction(d2, 2)} is not a non-negative integer")
        offs.append(d2 // 2)
    if any(offs[i] < offs[i + 1] for i in range(len(offs) - 1)):
        raise DominationError("offsets are not non-increasing")
    return tuple(offs)


@dataclass(frozen=True)
class ComponentGroup:
    """A(psi) as sign vectors on the distinct blocks.

    ``dims`` holds the full isotypic dimensions; when the dual group is
    special orthogonal the vectors are cut down by the determinant
    condition (product of signs weighted by those dimensions equals 1).
    """

    basis: tuple[Block, ...]
    dims: tuple[int, ...]
    det_relation: bool
    dual_has_center: bool
    elements: tuple[tuple[int, ...], ...]
    s_psi: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, s: tuple[int, ...]) -> bool:
        return tuple(s) in set(self.elements)

    @property
    def identity(self) -> tuple[int, ...]:
        return (1,) * len(self.basis)

    @property
    def relation_nontrivial(self) -> bool:
        return self.det_relation and any(d % 2 for d in self.dims)

    def canonical_character(self, values: Iterable[int]) -> tuple[int, ...]:
        """Canonical representative of a character given by generator values."""
        v = tuple(values)
        if len(v) != len(self.basis) or any(x not in (1, -1) for x in v):
            raise ParameterError("character values must be +-1 per basis block")
        if not self.relation_nontrivial:
            return v
        mask = tuple(-1 if d % 2 else 1 for d in self.dims)
        w = tuple(a * b for a, b in zip(v, mask))
        return min(v, w, key=lambda u: tuple(0 if x == 1 else 1 for x in u))

    def characters(self) -> tuple[tuple[int, ...], ...]:
        """All characters, as canonical generator-value vectors."""
        raw = itertools.product((1, -1), repeat=len(self.basis))
        return tuple(sorted({self.canonical_character(v) for v in raw}, reverse=True))

    @staticmethod
    def evaluate(values: tuple[int, ...], s: tuple[int, ...]) -> int:
        """Value at s of the character with the given generator values."""
        out = 1
        for v, x in zip(values, s):
            if x == -1:
                out *= v
        return out

    def center_image(self) -> tuple[int, ...]:
        """Image in A(psi) of the nontrivial central element of the dual group."""
        if not self.dual_has_center:
            return self.identity
        return (-1,) * len(self.basis)

    def character_trivial_on_center(self, values: tuple[int, ...]) -> bool:
        return self.evaluate(values, self.center_image()) == 1


def component_group(psi: ArthurParameter) -> ComponentGroup:
    """Component group of the centralizer, with s_psi = image of -1 in SL(2)."""
    if not good_parity(psi).ok:
        raise ParityError("component group requires good parity")
    basis = tuple(Block(b.t2, b.a, b.eta) for b in psi.blocks)
    dims = tuple(b.dim for b in psi.blocks)
    det_relation = psi.group.dual_special_orthogonal
    elements = []
    for signs in itertools.product((1, -1), repeat=len(basis)):
        if det_relation:
            det = 1
            for s, d in zip(signs, dims):
                if s == -1 and d % 2:
                    det = -det
            if det != 1:
                continue
        elements.append(signs)
    s_psi = tuple(-1 if b.a % 2 == 0 else 1 for b in basis)
    return ComponentGroup(
        basis=basis,
        dims=dims,
        det_relation=det_relation,
        dual_has_center=psi.group.dual_has_center,
        elements=tuple(sorted(elements, reverse=True)),
        s_psi=s_psi,
    )


@dataclass(frozen=True)
class QuotientMap:
    """The surjection A(psi_+) -> A(psi) that merges separated copies."""

    source: ComponentGroup
    target: ComponentGroup
    index_map: tuple[int, ...]

    def push(self, s_plus: tuple[int, ...]) -> tuple[int, ...]:
        if tuple(s_plus) not in self.source:
            raise ParameterError("element not in the source group")
        out = [1] * len(self.target.basis)
        for i, j in enumerate(self.index_map):
            out[j] *= s_plus[i]
        return tuple(out)

    @property
    def kernel_order(self) -> int:
        return self.source.order // self.target.order

    def kernel(self) -> tuple[tuple[int, ...], ...]:
        ident = self.target.identity
        return tuple(s for s in self.source.elements if self.push(s) == ident)

    def character_descends(self, values_plus: tuple[int, ...]) -> bool:
        """True iff the character is trivial on the kernel of the surjection."""
        fibers: dict[int, set[int]] = {}
        for i, j in enumerate(self.index_map):
            fibers.setdefault(j, set()).add(values_plus[i])
        return all(len(vals) == 1 for vals in fibers.values())

    def push_character(self, values_plus: tuple[int, ...]) -> tuple[int, ...] | None:
        """Descend a character to A(psi); None flags a vanishing coefficient."""
        if not self.character_descends(values_plus):
            return None
        out = [1] * len(self.target.basis)
        for i, j in enumerate(self.index_map):
            out[j] = values_plus[i]
        return self.target.canonical_character(out)


def quotient_map(psi_plus: ArthurParameter, psi: ArthurParameter) -> QuotientMap:
    domination_offsets(psi, psi_plus)
    source = component_group(psi_plus)
    target = component_group(psi)
    target_index = {b.key: j for j, b in enumerate(target.basis)}
    # positional correspondence of the expanded discrete parts
    disc_keys = [(t2, a, 1) for t2, a in psi.discrete]
    disc_pos = 0
    index_map = []
    for b in source.basis:
        if b.t2 > 0:
            key = disc_keys[disc_pos]
            disc_pos += 1
            index_map.append(target_index[key])
        else:
            index_map.append(target_index[b.key])
    qm = QuotientMap(source, target, tuple(index_map))
    if {qm.push(s) for s in source.elements} != set(target.elements):
        raise RuntimeError("quotient map is not surjective")
    return qm


@dataclass(frozen=True)
class EndoscopicSplit:
    """Elliptic endoscopic datum attached to an involution s in A(psi).

    The minus factor collects the blocks where s acts by -1 (dual
    dimension n'), the plus factor the rest (n''); n' + n'' = n*.
    """

    s: tuple[int, ...]
    factor_minus: ClassicalGroup
    factor_plus: ClassicalGroup
    psi_minus: ArthurParameter | None
    psi_plus: ArthurParameter | None

    @property
    def n_minus(self) -> int:
        return self.factor_minus.dual_dim

    @property
    def n_plus(self) -> int:
        return self.factor_plus.dual_dim


def _factor_group(base: ClassicalGroup, dual_dim: int) -> ClassicalGroup:
    if base.dual_symplectic:
        if dual_dim % 2:
            raise ParameterError("symplectic dual cannot split with odd part")
        return ClassicalGroup("SOodd", dual_dim // 2)
    if dual_dim % 2:
        return ClassicalGroup("Sp", (dual_dim - 1) // 2)
    return ClassicalGroup("SOeven", dual_dim // 2)


def endoscopic_split(psi: ArthurParameter, s: Iterable[int]) -> EndoscopicSplit:
    group = component_group(psi)
    s = tuple(s)
    if s not in group:
        raise ParameterError(f"{s} is not an element of A(psi)")
    blocks_minus = []
    blocks_plus = []
    for sign, b in zip(s, psi.blocks):
        (blocks_minus if sign == -1 else blocks_plus).append(b)
    n_minus = sum(b.dim for b in blocks_minus)
    n_plus = sum(b.dim for b in blocks_plus)
    fm = _factor_group(psi.group, n_minus)
    fp = _factor_group(psi.group, n_plus)
    pm = arthur_parameter(fm, blocks_minus) if blocks_minus else None
    pp = arthur_parameter(fp, blocks_plus) if blocks_plus else None
    return EndoscopicSplit(s, fm, fp, pm, pp)


def _block_candidates(group: ClassicalGroup, t2_max: int, a_max: int) -> list[Block]:
    out = []
    for t2 in range(t2_max + 1):
        for a in range(1, a_max + 1):
            etas = (1,) if t2 > 0 else (1, -1)
            for eta in etas:
                b = Block(t2, a, eta)
                if _block_parity(group, b).ok:
                    out.append(b)
    out.sort(key=lambda b: (-b.t2, -b.a, -b.eta))
    return out


def enumerate_parameters(
    group: ClassicalGroup, t_max=Fraction(7, 2), a_max: int = 4
) -> Iterator[ArthurParameter]:
    """All good-parity parameters for the group with bounded block data."""
    t2_max = int(Fraction(t_max) * 2)
    cands = _block_candidates(group, t2_max, a_max)
    target = group.dual_dim

    def rec(idx: int, remaining: int, chosen: list[Block]) -> Iterator[ArthurParameter]:
        if remaining == 0:
            yield ArthurParameter(group, tuple(chosen))
            return
        if idx == len(cands):
            return
        b = cands[idx]
        unit = b.rho_dim * b.a
        max_mult = remaining // unit
        for m in range(max_mult, 0, -1):
            chosen.append(Block(b.t2, b.a, b.eta, m))
            yield from rec(idx + 1, remaining - unit * m, chosen)
            chosen.pop()
        yield from rec(idx + 1, remaining, chosen)

    yield from rec(0, target, [])
