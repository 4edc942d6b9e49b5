"""Countable coherent spaces given by decidable coherence oracles.

A presented space is never decided globally: operations only look at a finite
window (truncation) or at finitely many certificate values.  Built-in
families include the disjoint union of all complete graphs, whose truncations
have slowly but unboundedly growing clique number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .reports import LawReport
from .spaces import CoherentSpace, _check_cap, alpha, mk_space, omega

# profiles use branch-and-bound only (no powerset sweep), so the window cap
# can sit well above the family-enumeration cap
DEFAULT_PROFILE_CAP = 64


class OracleContractError(ValueError):
    """The coherence oracle or a certificate violated its contract on the
    inspected window."""


@dataclass(frozen=True)
class Certificate:
    kind: str  # "infinite-clique" | "infinite-anticlique"
    generator: Callable[[int], int]  # strictly increasing vertex stream

    def __post_init__(self):
        if self.kind not in ("infinite-clique", "infinite-anticlique"):
            raise ValueError(f"unknown certificate kind {self.kind!r}")


@dataclass(frozen=True)
class PresentedSpace:
    name: str
    coh: Callable[[int, int], bool]
    certificates: tuple[Certificate, ...] = ()

    def __post_init__(self):
        # spot-check symmetry and reflexivity on a small window; totality and
        # global symmetry are the caller's contract
        for a in range(8):
            if not self.coh(a, a):
                raise OracleContractError(
                    f"{self.name}: oracle not reflexive at ({a},{a})")
            for b in range(a):
                if self.coh(a, b) != self.coh(b, a):
                    raise OracleContractError(
                        f"{self.name}: oracle not symmetric at ({a},{b})")


def truncate(p: PresentedSpace, n: int) -> CoherentSpace:
    """Finite window: the induced space on vertices 0..n-1."""
    if n < 0:
        raise ValueError("truncation size must be >= 0")
    pairs = []
    for a in range(n):
        if not p.coh(a, a):
            raise OracleContractError(
                f"{p.name}: oracle not reflexive at ({a},{a})")
        for b in range(a):
            ab, ba = p.coh(a, b), p.coh(b, a)
            if ab != ba:
                raise OracleContractError(
                    f"{p.name}: oracle not symmetric at ({a},{b})")
            if ab:
                pairs.append((b, a))
    return mk_space(range(n), pairs)


# -- built-in families -------------------------------------------------------

def block_of(v: int) -> int:
    """1-based block of vertex v in the disjoint-K_n family: block b occupies
    labels [b(b-1)/2, b(b+1)/2)."""
    b = 1
    while b * (b + 1) // 2 <= v:
        b += 1
    return b


def block_start(b: int) -> int:
    return b * (b - 1) // 2


def _blocks_coh(a: int, b: int) -> bool:
    return a == b or block_of(a) == block_of(b)


def _blocks_edited_coh(a: int, b: int) -> bool:
    # blocks_kn with one cross edge added between vertices 0 and 1
    if {a, b} == {0, 1}:
        return True
    return _blocks_coh(a, b)


def nat_complete() -> PresentedSpace:
    return PresentedSpace(
        "nat_complete",
        lambda a, b: True,
        (Certificate("infinite-clique", lambda i: i),),
    )


def nat_discrete() -> PresentedSpace:
    return PresentedSpace(
        "nat_discrete",
        lambda a, b: a == b,
        (Certificate("infinite-anticlique", lambda i: i),),
    )


def blocks_kn() -> PresentedSpace:
    # anticlique certificate: the first vertex of every block
    return PresentedSpace(
        "blocks_kn",
        _blocks_coh,
        (Certificate("infinite-anticlique", lambda i: block_start(i + 1)),),
    )


def blocks_kn_edge_edited() -> PresentedSpace:
    return PresentedSpace("blocks_kn_edge_edited", _blocks_edited_coh)


def builtin_families() -> list[PresentedSpace]:
    return [nat_complete(), nat_discrete(), blocks_kn(),
            blocks_kn_edge_edited()]


def builtin_family(name: str) -> PresentedSpace:
    for p in builtin_families():
        if p.name == name:
            return p
    raise ValueError(f"unknown presented family {name!r}")


# -- diagnostics -------------------------------------------------------------

def check_certificate(p: PresentedSpace, cert: Certificate,
                      depth: int) -> LawReport:
    """Verify pairwise coherence (clique kind) or incoherence (anticlique
    kind) among the first ``depth`` generated vertices."""
    if depth < 2:
        raise ValueError("certificate depth must be >= 2")
    verts = [cert.generator(i) for i in range(depth)]
    for i in range(1, depth):
        if verts[i] <= verts[i - 1]:
            raise OracleContractError(
                f"{p.name}: certificate generator not strictly increasing "
                f"at index {i}")
    want_coherent = cert.kind == "infinite-clique"
    witness = None
    for i in range(depth):
        for j in range(i):
            if p.coh(verts[j], verts[i]) != want_coherent:
                witness = {"pair": [verts[j], verts[i]],
                           "coherent": p.coh(verts[j], verts[i])}
                break
        if witness:
            break
    return LawReport(
        law="certificate-finite-depth",
        params={"space": p.name, "kind": cert.kind, "depth": depth,
                "note": "evidence to finite depth only; nothing is decided "
                        "about the full infinite set"},
        passed=witness is None,
        witness=witness,
    )


def growth_profile(p: PresentedSpace, sample_sizes: Sequence[int],
                   cap: int = DEFAULT_PROFILE_CAP
                   ) -> list[tuple[int, int, int]]:
    """(n, omega, alpha) of the truncation at each sample size."""
    out = []
    for n in sample_sizes:
        _check_cap(n, cap)
        c = truncate(p, n)
        out.append((n, omega(c), alpha(c)))
    return out


def cover_growth(p: PresentedSpace, sample_sizes: Sequence[int],
                 cap: int = DEFAULT_PROFILE_CAP
                 ) -> list[tuple[int, int]]:
    """(n, anticlique-cover lower bound) per sample; the lower bound is the
    clique number of the truncation."""
    out = []
    for n in sample_sizes:
        _check_cap(n, cap)
        c = truncate(p, n)
        out.append((n, omega(c)))
    return out


def edit_comparison(
    p: PresentedSpace,
    p_edited: PresentedSpace,
    sample_sizes: Sequence[int],
    edits: Sequence[tuple[int, int]],
    cap: int = DEFAULT_PROFILE_CAP,
) -> list[tuple[int, int, int]]:
    """(n, |alpha difference|, |omega difference|) per sample size.

    ``edits`` declares every pair on which the two oracles differ; any
    undeclared difference found on the inspected window is a contract error.
    """
    declared = {frozenset(e) for e in edits}
    max_n = max(sample_sizes, default=0)
    for a in range(max_n):
        for b in range(a):
            if p.coh(a, b) != p_edited.coh(a, b) and frozenset((a, b)) not in declared:
                raise OracleContractError(
                    f"undeclared oracle difference at ({b},{a})")
    out = []
    for n in sample_sizes:
        _check_cap(n, cap)
        c = truncate(p, n)
        ce = truncate(p_edited, n)
        out.append((n, abs(alpha(c) - alpha(ce)), abs(omega(c) - omega(ce))))
    return out


def profile_csv(rows: Sequence[tuple], header: Sequence[str]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
