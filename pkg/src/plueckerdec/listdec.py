"""Block-code structure of lifted codes and the list decoder.

The coordinates of a lifted codeword at index tuples meeting {1..k} in
exactly k-1 positions are, up to sign, the entries of the codeword matrix,
so they form a linear block code over F_q.  Its parity-check equations,
extended by zeros to the full coordinate vector, combine with the ball
equations, the shuffle relations, and the normalization x_{1..k} = 1 into
a system whose solutions are exactly the codewords within the requested
subspace distance of the received space.

Three interchangeable strategies return that list: solving the equation
system (`paper`), enumerating codewords against the ball forms
(`reduced`), and enumerating codewords against the distance itself
(`oracle`).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .errors import DecodeError
from .gf import ExtElement, phi_inv
from .matgf import MatGF, _rref_rows, kernel_basis, rank, rref, solve_affine
from .gabidulin import (
    GabidulinCode,
    RankCodeword,
    Subspace,
    encode,
    enumerate_messages,
    lift,
    message_key,
    message_of,
    subspace_distance,
)
from .pluecker import (
    IndexTuple,
    LinearForm,
    PlueckerVector,
    QuadraticRelation,
    all_tuples,
    ball_equations,
    embed,
    shuffle_relations,
    tau_count,
    tuple_rank,
)

STRATEGIES = ("paper", "reduced", "oracle")

DEFAULT_ENUMERATION_CAP = 2**20
DEFAULT_COSET_LIMIT = 2**12


@lru_cache(maxsize=None)
def qualifying_tuples(n: int, k: int) -> tuple[IndexTuple, ...]:
    """Lex-ordered k-tuples meeting {1..k} in exactly k-1 positions."""
    return tuple(
        t for t in all_tuples(n, k) if sum(1 for x in t if x <= k) == k - 1
    )


def pluecker_entry_formula(i: Sequence[int], a: MatGF) -> int:
    """Coordinate of the lifted codeword of `a` at a qualifying tuple.

    With s the element of {1..k} missing from the tuple and t its unique
    entry above k, the minor collapses to (-1)^(k-s) * a[s][t-k].
    """
    k = a.rows
    n = k + a.cols
    tt = tuple(i)
    big = [x for x in tt if x > k]
    small = [x for x in tt if 1 <= x <= k]
    if len(big) != 1 or len(small) != k - 1 or big[0] > n:
        raise DecodeError(f"tuple {tt} does not meet {{1..{k}}} in exactly {k - 1} positions")
    t = big[0]
    s = next(x for x in range(1, k + 1) if x not in set(small))
    val = a.at(s - 1, t - k - 1)
    return val if (k - s) % 2 == 0 else -val % a.ctx.q


def _matrix_from_coords(
    code: GabidulinCode, positions: Sequence[IndexTuple], values: Sequence[int]
) -> MatGF:
    """Invert the entry formula: qualifying coordinates back to the matrix."""
    k, q = code.k, code.q
    entries = [[0] * code.ell for _ in range(k)]
    for pos, v in zip(positions, values):
        t = next(x for x in pos if x > k)
        s = next(x for x in range(1, k + 1) if x not in set(pos))
        entries[s - 1][t - k - 1] = v if (k - s) % 2 == 0 else -v % q
    return MatGF.from_rows(code.ext.base, entries)


@dataclass(frozen=True)
class BlockCodeView:
    """Generator and parity-check matrices of the qualifying-coordinate code."""

    code: GabidulinCode
    positions: tuple[IndexTuple, ...]
    Gp: MatGF
    Hp: MatGF


@lru_cache(maxsize=None)
def build_block_code(code: GabidulinCode) -> BlockCodeView:
    """Restrict the lifted code to the qualifying coordinates.

    The rows of Gp are the coordinate patterns of the codewords encoding
    the base-field message basis alpha^j * e_i; Hp is the RREF kernel
    basis of their span.
    """
    n, k = code.n, code.k
    positions = qualifying_tuples(n, k)
    alpha = code.ext.alpha()
    zero = code.ext.zero()
    rows = []
    for i in range(code.msg_len):
        for j in range(code.ell):
            msg = [zero] * code.msg_len
            msg[i] = alpha**j
            cw = encode(code, msg)
            rows.append([pluecker_entry_formula(pos, cw.mat) for pos in positions])
    Gp = MatGF.from_rows(code.ext.base, rows)
    if rank(Gp) != code.rho:
        raise DecodeError("block code generator is rank deficient")
    Hp, _ = rref(kernel_basis(Gp))
    return BlockCodeView(code, positions, Gp, Hp)


def extended_parity(bc: BlockCodeView) -> list[LinearForm]:
    """Parity rows of Hp scattered into the full coordinate vector.

    Every non-qualifying position, including x_{1..k}, gets coefficient
    zero, so the forms read identically on full Pluecker vectors.
    """
    code = bc.code
    n, k = code.n, code.k
    nvars = comb(n, k)
    spots = [tuple_rank(pos, n, k) for pos in bc.positions]
    forms = []
    for i in range(bc.Hp.rows):
        coeffs = [0] * nvars
        for j, g in enumerate(spots):
            coeffs[g] = bc.Hp.at(i, j)
        forms.append(LinearForm(tuple(coeffs), 0))
    return forms


@dataclass(frozen=True)
class EquationSystem:
    """Linear forms plus quadratic relations in the C(n,k) coordinates."""

    nvars: int
    linear: tuple[LinearForm, ...]
    quadratic: tuple[QuadraticRelation, ...]


def assemble_system(code: GabidulinCode, r: Subspace, e: int) -> EquationSystem:
    """Normalization, extended parity, and ball forms, plus the shuffles."""
    n, k = code.n, code.k
    nvars = comb(n, k)
    norm = [0] * nvars
    norm[tuple_rank(tuple(range(1, k + 1)), n, k)] = 1
    linear = [LinearForm(tuple(norm), 1)]
    linear.extend(extended_parity(build_block_code(code)))
    linear.extend(ball_equations(r, e))
    return EquationSystem(nvars, tuple(linear), shuffle_relations(n, k))


def _check_decode_args(code: GabidulinCode, r: Subspace, e: int) -> None:
    if r.n != code.n:
        raise DecodeError(f"received space lives in dimension {r.n}, code in {code.n}")
    if r.k != code.k:
        raise DecodeError(
            f"received spaces of dimension {r.k} are unsupported; this decoder "
            f"requires dimension {code.k}"
        )
    if not 0 <= e <= code.k:
        raise DecodeError(f"need 0 <= e <= k, got e={e}")


def system_report(
    code: GabidulinCode, r: Subspace, e: int
) -> tuple[EquationSystem, dict]:
    """Assembled system with its size statistics.

    The counts are also recomputed from the closed forms
    tau + 1 + (delta-1)(n-k) and C(n, 2k) and must agree.
    """
    _check_decode_args(code, r, e)
    n, k, delta = code.n, code.k, code.delta
    system = assemble_system(code, r, e)
    stats = {
        "linear_eqs": len(system.linear),
        "quadratic_eqs": len(system.quadratic),
        "vars": system.nvars,
    }
    expected_linear = tau_count(n, k, e) + 1 + (delta - 1) * (n - k)
    if stats["linear_eqs"] != expected_linear or stats["quadratic_eqs"] != comb(n, 2 * k):
        raise DecodeError("equation counts disagree with the closed forms")
    return system, stats


# ---------------------------------------------------------------------------
# Decoding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecodeEntry:
    message: tuple[ExtElement, ...]
    codeword: RankCodeword
    subspace: Subspace
    pluecker: PlueckerVector


@dataclass
class DecodeList:
    entries: tuple[DecodeEntry, ...]
    stats: dict

    def subspaces(self) -> set[Subspace]:
        return {entry.subspace for entry in self.entries}


@lru_cache(maxsize=32)
def _code_table(
    code: GabidulinCode, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[DecodeEntry, ...]:
    """All codewords with their liftings and embeddings, message-lex order."""
    if code.size > cap:
        raise DecodeError(f"code size {code.size} exceeds the enumeration cap {cap}")
    table = []
    for msg in enumerate_messages(code):
        cw = encode(code, msg)
        sub = lift(cw)
        table.append(DecodeEntry(msg, cw, sub, embed(sub)))
    return tuple(table)


def _digits(i: int, base: int, width: int) -> list[int]:
    """Digits of i in the given base, most significant first."""
    out = [0] * width
    for pos in range(width - 1, -1, -1):
        out[pos] = i % base
        i //= base
    return out


def _map_indices(fn: Callable[[int], object], total: int, workers: int | None) -> list:
    """Apply fn to 0..total-1, optionally fanning out over worker threads.

    Results are merged in index order, so the output does not depend on
    the worker count.
    """
    w = max(1, min(workers or 1, total or 1))
    if w == 1:
        return [fn(i) for i in range(total)]
    from concurrent.futures import ThreadPoolExecutor

    step = -(-total // w)
    ranges = [range(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ThreadPoolExecutor(max_workers=w) as pool:
        parts = pool.map(lambda rg: [fn(i) for i in rg], ranges)
        return [x for part in parts for x in part]


@lru_cache(maxsize=2**16)
def _entry_for_matrix(code: GabidulinCode, mat: MatGF) -> DecodeEntry:
    """Codeword entry determined by a matrix; candidates recur across
    received spaces, so this is memoized."""
    vec = tuple(phi_inv(code.ext, mat.row_list(i)) for i in range(code.k))
    cw = RankCodeword(vec, mat)
    sub = lift(cw)
    return DecodeEntry(message_of(code, cw), cw, sub, embed(sub))


def _verify_candidate(
    code: GabidulinCode,
    mat: MatGF,
    system: EquationSystem,
    expect_coords: tuple[int, ...] | None,
) -> DecodeEntry | None:
    """Reconstruct the codeword of a candidate matrix and check the system.

    With `expect_coords` the embedding must reproduce the solved
    assignment exactly; otherwise every linear form and every quadratic
    relation is evaluated on the embedding.
    """
    q = code.q
    entry = _entry_for_matrix(code, mat)
    coords = entry.pluecker.coords
    if expect_coords is not None:
        if coords != expect_coords:
            return None
    else:
        if not all(f.holds(coords, q) for f in system.linear):
            return None
        if any(rel.evaluate(coords, q) for rel in system.quadratic):
            return None
    return entry


def _decode_paper(
    code: GabidulinCode,
    r: Subspace,
    e: int,
    enumeration_cap: int,
    coset_limit: int,
    workers: int | None,
) -> tuple[list[DecodeEntry], dict]:
    q = code.q
    system = assemble_system(code, r, e)
    positions = qualifying_tuples(code.n, code.k)
    block_ranks = [tuple_rank(p, code.n, code.k) for p in positions]

    coeff = MatGF.from_rows(code.ext.base, [list(f.coeffs) for f in system.linear])
    rhs = [f.rhs for f in system.linear]
    solution = solve_affine(coeff, rhs)
    if solution is None:
        return [], {"solver_path": "infeasible", "candidates_enumerated": 0}

    particular, kernel = solution
    dim = kernel.rows
    if q**dim <= min(coset_limit, enumeration_cap):
        return _paper_full_coset(
            code, system, positions, block_ranks, particular, kernel, workers
        )
    return _paper_projected(
        code, system, positions, block_ranks, enumeration_cap, workers
    )


def _paper_full_coset(
    code: GabidulinCode,
    system: EquationSystem,
    positions: tuple[IndexTuple, ...],
    block_ranks: list[int],
    particular: tuple[int, ...],
    kernel: MatGF,
    workers: int | None,
) -> tuple[list[DecodeEntry], dict]:
    """Enumerate the affine solution coset of the linear part directly.

    Free coordinates run in lex order of their positions; assignments
    failing a quadratic relation are dropped, the rest are mapped back to
    matrices and kept when re-embedding reproduces them.
    """
    q = code.q
    dim = kernel.rows
    total = q**dim
    krows = [kernel.row_list(i) for i in range(dim)]
    quads = [
        tuple(
            (tuple_rank(a, code.n, code.k), tuple_rank(b, code.n, code.k), c)
            for a, b, c in rel.terms
        )
        for rel in system.quadratic
    ]

    def process(i: int) -> DecodeEntry | None:
        x = list(particular)
        for v, krow in zip(_digits(i, q, dim), krows):
            if v:
                for j, kv in enumerate(krow):
                    if kv:
                        x[j] = (x[j] + v * kv) % q
        for terms in quads:
            if sum(c * x[ia] * x[ib] for ia, ib, c in terms) % q:
                return None
        mat = _matrix_from_coords(code, positions, [x[g] for g in block_ranks])
        return _verify_candidate(code, mat, system, tuple(x))

    results = _map_indices(process, total, workers)
    entries = [r for r in results if r is not None]
    return entries, {"solver_path": "coset", "candidates_enumerated": total}


def _paper_projected(
    code: GabidulinCode,
    system: EquationSystem,
    positions: tuple[IndexTuple, ...],
    block_ranks: list[int],
    enumeration_cap: int,
    workers: int | None,
) -> tuple[list[DecodeEntry], dict]:
    """Eliminate the non-qualifying coordinates before enumerating.

    Ordering the qualifying coordinates last, the RREF rows whose pivots
    land among them constrain those coordinates alone; the projection of
    the full solution set.  Candidates from this much smaller affine set
    are re-embedded and checked against the complete system, which keeps
    the output identical to direct coset enumeration.
    """
    q = code.q
    nvars = system.nvars
    blocked = set(block_ranks)
    others = [i for i in range(nvars) if i not in blocked]
    perm = others + block_ranks
    cut = len(others)

    aug = [[f.coeffs[p] for p in perm] + [f.rhs % q] for f in system.linear]
    pivots = _rref_rows(aug, q)
    if pivots and pivots[-1] == nvars:
        return [], {"solver_path": "infeasible", "candidates_enumerated": 0}

    block_rows = []
    block_rhs = []
    for row, p in zip(aug, pivots):
        if p >= cut:
            block_rows.append(row[cut:nvars])
            block_rhs.append(row[nvars])
    nb = len(block_ranks)
    m = (
        MatGF.from_rows(code.ext.base, block_rows)
        if block_rows
        else MatGF.zeros(code.ext.base, 0, nb)
    )
    solution = solve_affine(m, block_rhs)
    if solution is None:  # unreachable: infeasibility already detected
        return [], {"solver_path": "infeasible", "candidates_enumerated": 0}
    particular, kernel = solution
    dim = kernel.rows
    total = q**dim
    if total > enumeration_cap:
        raise DecodeError(
            f"{total} candidate assignments exceed the enumeration cap {enumeration_cap}"
        )
    krows = [kernel.row_list(i) for i in range(dim)]

    def process(i: int) -> DecodeEntry | None:
        xb = list(particular)
        for v, krow in zip(_digits(i, q, dim), krows):
            if v:
                for j, kv in enumerate(krow):
                    if kv:
                        xb[j] = (xb[j] + v * kv) % q
        mat = _matrix_from_coords(code, positions, xb)
        return _verify_candidate(code, mat, system, None)

    results = _map_indices(process, total, workers)
    entries = [r for r in results if r is not None]
    return entries, {"solver_path": "projected", "candidates_enumerated": total}


def _decode_reduced(
    code: GabidulinCode, r: Subspace, e: int, cap: int
) -> tuple[list[DecodeEntry], dict]:
    """Test the ball forms on the embedding of every codeword."""
    q = code.q
    forms = ball_equations(r, e)
    packed = [
        tuple((j, c) for j, c in enumerate(f.coeffs) if c) for f in forms
    ]
    entries = []
    for entry in _code_table(code, cap):
        coords = entry.pluecker.coords
        if all(sum(c * coords[j] for j, c in nz) % q == 0 for nz in packed):
            entries.append(entry)
    return entries, {"candidates_enumerated": code.size}


def _decode_oracle(
    code: GabidulinCode, r: Subspace, e: int, cap: int
) -> tuple[list[DecodeEntry], dict]:
    """Test the subspace distance of every codeword directly."""
    entries = [
        entry
        for entry in _code_table(code, cap)
        if subspace_distance(entry.subspace, r) <= 2 * e
    ]
    return entries, {"candidates_enumerated": code.size}


def decode_list(
    code: GabidulinCode,
    r: Subspace,
    e: int,
    strategy: str = "paper",
    *,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    coset_limit: int = DEFAULT_COSET_LIMIT,
    workers: int | None = None,
) -> DecodeList:
    """Complete list of codewords within subspace distance 2e of r.

    All strategies return the same entries, sorted by message; they differ
    only in how the list is derived.
    """
    _check_decode_args(code, r, e)
    if strategy not in STRATEGIES:
        raise DecodeError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    start = time.perf_counter()
    if strategy == "paper":
        entries, extra = _decode_paper(code, r, e, enumeration_cap, coset_limit, workers)
    elif strategy == "reduced":
        entries, extra = _decode_reduced(code, r, e, enumeration_cap)
    else:
        entries, extra = _decode_oracle(code, r, e, enumeration_cap)
    entries.sort(key=lambda entry: message_key(code, entry.message))
    stats = {
        "strategy": strategy,
        "linear_eqs": tau_count(code.n, code.k, e) + 1 + (code.delta - 1) * (code.n - code.k),
        "quadratic_eqs": comb(code.n, 2 * code.k),
        "vars": comb(code.n, code.k),
        "elapsed_ms": round((time.perf_counter() - start) * 1000.0, 3),
        **extra,
    }
    return DecodeList(tuple(entries), stats)
