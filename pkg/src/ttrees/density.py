"""The density parameter rho and the two bounds tied to elementary sets.

rho(G) maximizes 2|E(G[S])| / (|S|-1) over odd vertex subsets S of size at
least 3; its ceiling lower-bounds the chromatic index.  All values are
exact rationals and ceilings are computed on rationals, never through
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .multigraph import InputError, Multigraph

_EXACT_LIMIT = 18  # 'auto' enumerates exhaustively up to this many vertices


@dataclass(frozen=True)
class DensityCertificate:
    witness_set: frozenset[int]
    value: Fraction
    ceiling: int

    def __post_init__(self) -> None:
        if len(self.witness_set) % 2 == 0 or len(self.witness_set) < 3:
            raise InputError("witness set must be odd and of size >= 3")


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _pair_counts(g: Multigraph) -> list[list[int]]:
    """counts[v][u] = number of parallel edges between v and u."""
    counts = [[0] * g.vertex_count for _ in range(g.vertex_count)]
    for a, b in g.edges:
        counts[a][b] += 1
        counts[b][a] += 1
    return counts


def _rho_exact_all(g: Multigraph) -> tuple[Fraction, list[frozenset[int]]]:
    """Enumerate every odd subset; returns the max value and all maximizers."""
    n = g.vertex_count
    counts = _pair_counts(g)
    edges_in: list[int] = [0] * (1 << n)
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        gain = 0
        r = rest
        while r:
            u = (r & -r).bit_length() - 1
            gain += counts[v][u]
            r &= r - 1
        edges_in[mask] = edges_in[rest] + gain
    best = Fraction(-1)
    wits: list[frozenset[int]] = []
    for mask in range(1 << n):
        size = mask.bit_count()
        if size < 3 or size % 2 == 0:
            continue
        val = Fraction(2 * edges_in[mask], size - 1)
        if val > best:
            best = val
            wits = [frozenset(v for v in range(n) if mask >> v & 1)]
        elif val == best:
            wits.append(frozenset(v for v in range(n) if mask >> v & 1))
    if best < 0:
        raise InputError("graph has fewer than 3 vertices")
    return best, wits


def _rho_bnb_all(g: Multigraph) -> tuple[Fraction, list[frozenset[int]]]:
    """Branch and bound over odd subsets, keeping every maximizer.

    Vertices are branched in decreasing-degree order; the bound grants each
    unbranched vertex its full degree as a potential gain and prunes only
    strictly below the incumbent, so ties survive to the leaves.
    """
    n = g.vertex_count
    if n < 3:
        raise InputError("graph has fewer than 3 vertices")
    counts = _pair_counts(g)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    cnt = [[counts[order[i]][order[j]] for j in range(n)] for i in range(n)]
    # degrem[u][i] = parallel-edge count from position u into positions >= i,
    # i.e. into the still-unbranched pool.
    degrem: list[list[int]] = []
    for u in range(n):
        suf = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suf[i] = suf[i + 1] + cnt[u][i]
        degrem.append(suf)

    best = Fraction(0)
    wits: list[frozenset[int]] = []
    members: list[int] = []
    ecur = [0] * n  # edges from each position into the current member set

    def record(m_cur: int) -> None:
        nonlocal best, wits
        size = len(members)
        if size < 3 or size % 2 == 0:
            return
        val = Fraction(2 * m_cur, size - 1)
        if val > best:
            best = val
            wits = [frozenset(order[j] for j in members)]
        elif val == best:
            wits.append(frozenset(order[j] for j in members))

    def can_beat(i: int, m_cur: int) -> bool:
        # Adding a pool vertex u gains at most its edges into the members
        # plus its edges into the pool, so sorted caps give an optimistic
        # completion for every admissible final size.  >= keeps ties alive.
        size = len(members)
        p, q = best.numerator, best.denominator
        if size >= 3 and size % 2 == 1 and 2 * m_cur * q >= p * (size - 1):
            return True
        caps = sorted((ecur[j] + degrem[j][i] for j in range(i, n)), reverse=True)
        acc = 0
        for t in range(1, len(caps) + 1):
            acc += caps[t - 1]
            s_final = size + t
            if s_final >= 3 and s_final % 2 == 1 and 2 * (m_cur + acc) * q >= p * (s_final - 1):
                return True
        return False

    def dfs(i: int, m_cur: int) -> None:
        if i == n:
            return
        if not can_beat(i, m_cur):
            return
        gain = ecur[i]
        members.append(i)
        row = cnt[i]
        for j in range(n):
            ecur[j] += row[j]
        record(m_cur + gain)
        dfs(i + 1, m_cur + gain)
        members.pop()
        for j in range(n):
            ecur[j] -= row[j]
        dfs(i + 1, m_cur)

    dfs(0, 0)
    if not wits:
        # No subset has any edges: value 0 with a minimal witness.
        return Fraction(0), [frozenset(sorted(range(g.vertex_count))[:3])]
    return best, wits


@lru_cache(maxsize=64)
def _all_max_cached(g: Multigraph, exact: bool) -> tuple[Fraction, tuple[frozenset[int], ...]]:
    value, wits = _rho_exact_all(g) if exact else _rho_bnb_all(g)
    return value, tuple(wits)


def all_max_witnesses(g: Multigraph, mode: str = "auto") -> tuple[Fraction, list[frozenset[int]]]:
    if g.vertex_count < 3:
        raise InputError("rho needs at least 3 vertices")
    if mode not in ("auto", "exact", "bnb"):
        raise InputError(f"unknown rho mode {mode!r}")
    exact = mode == "exact" or (mode == "auto" and g.vertex_count <= _EXACT_LIMIT)
    value, wits = _all_max_cached(g, exact)
    return value, list(wits)


def rho(g: Multigraph, mode: str = "auto") -> DensityCertificate:
    """Maximum density over odd subsets, with a maximizing witness.

    mode 'exact' enumerates all odd subsets (feasible to ~20 vertices);
    'bnb' prunes with branch and bound; 'auto' picks by size.  Both modes
    agree; exact enumeration is the oracle for the other.
    """
    value, wits = all_max_witnesses(g, mode)
    witness = min(wits, key=sorted)
    return DensityCertificate(witness, value, ceil_fraction(value))


def unique_max_witness(g: Multigraph, mode: str = "auto") -> tuple[bool, frozenset[int]]:
    """Whether exactly one odd subset attains the maximum, and which."""
    value, wits = all_max_witnesses(g, mode)
    witness = min(wits, key=sorted)
    return len(wits) == 1, witness


def elementary_lower_bound(k: int, w_size: int) -> int:
    """Certified lower bound on the chromatic index from an elementary,
    defect-free tree scope of odd size w_size under k colours.

    Each colour induces a near-perfect matching on the scope, so the scope
    holds at least k(w_size-1)/2 coloured edges, plus one for the
    uncoloured edge; dividing by the matching capacity (w_size-1)/2 and
    taking the ceiling certifies a bound strictly above k.
    """
    if w_size < 3 or w_size % 2 == 0:
        raise InputError("w_size must be odd and >= 3")
    return ceil_fraction(Fraction(2 * (k * (w_size - 1) // 2 + 1), w_size - 1))


def defective_upper_bound(delta: int, w_size: int) -> Fraction:
    """Diagnostic bound Delta + 1 + (Delta-3)/(w_size-1).

    Valid when the scope is elementary with a defective colour: the scope's
    missing colours are distinct, the defective colour is yet another, and
    rearranging the resulting count gives this cap on the chromatic index.
    """
    if w_size < 2:
        raise InputError("w_size must be >= 2")
    return Fraction(delta + 1) + Fraction(delta - 3, w_size - 1)
