"""Randomized stress tests for the mod-8 determinant lemmas.

Each lemma pairs a generator, which draws a random instance satisfying
the hypotheses, with a checker, which re-verifies the hypotheses from
scratch (never trusting the generator) and then tests the conclusion by
exact integer determinant or resultant reduced mod 8. A failed
conclusion would be a counterexample; the instance then serializes to a
replay file with seed, sizes, and entries.

Lemma ids:

* D: square matrix with even off-diagonal entries whose symmetric
  products vanish mod 8; determinant = product of the diagonal mod 8.
* L1a: res(x^n + 4 F0 + 2 F1 + F2, 2 H + 1) = 1 mod 8 for x | H,
  deg H = s, deg F_k < n - k s.
* L1b: res(x^n + 2 F0 + F1, 4 H + 1) = 1 mod 8, same shapes, no F2.
* L2: block matrix [[A, B], [(C over 0), D]] with unit diagonals, parity
  and mod-4 constraints on A, B, C, D; determinant = 1 mod 8.
* GENERAL: the (m+n) x (m+n) shape with m = n - 4, s = (n-1)//3 and the
  offset-based congruence ladder; determinant = 1 mod 8.

Entry distributions are uniform over the residues a slot admits, with
zero weighted to one half so that sparse and dense instances both occur.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from . import intres
from .intres import IntMatrix, IntPoly

LEMMA_IDS = ("D", "L1a", "L1b", "L2", "GENERAL")

EVEN_RESIDUES = (0, 2, 4, 6)
MULT4_RESIDUES = (0, 4)
ALL_RESIDUES = tuple(range(8))


class HypothesisViolation(ValueError):
    """An instance fails the lemma hypotheses; not a counterexample."""


@dataclass(frozen=True)
class Mod8Matrix:
    """Rectangular matrix with entries in 0..7."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        if any(not 0 <= e < 8 for r in self.rows for e in r):
            raise ValueError("entries must lie in 0..7")
        object.__setattr__(self, "rows", tuple(tuple(int(e) for e in r) for r in self.rows))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0


@dataclass
class LemmaInstance:
    """One generated instance: the lemma, its sizes, seed, and payload."""

    lemma_id: str
    params: dict
    seed: int
    matrix: Mod8Matrix | None = None
    polys: dict[str, tuple[int, ...]] = field(default_factory=dict)
    notes: str = ""

    def to_json(self) -> dict:
        out = {"lemma_id": self.lemma_id, "params": dict(self.params), "seed": self.seed}
        if self.matrix is not None:
            out["matrix"] = [list(r) for r in self.matrix.rows]
        if self.polys:
            out["polys"] = {k: list(v) for k, v in self.polys.items()}
        if self.notes:
            out["notes"] = self.notes
        return out

    @classmethod
    def from_json(cls, data: dict) -> LemmaInstance:
        matrix = Mod8Matrix(tuple(map(tuple, data["matrix"]))) if "matrix" in data else None
        polys = {k: tuple(v) for k, v in data.get("polys", {}).items()}
        return cls(data["lemma_id"], dict(data["params"]), int(data["seed"]),
                   matrix, polys, data.get("notes", ""))


def _draw(rng: random.Random, choices) -> int:
    # zero half the time so sparse and dense hypotheses both get exercised
    nonzero = [c for c in choices if c != 0]
    if not nonzero:
        return 0
    if 0 in choices and rng.random() < 0.5:
        return 0
    return rng.choice(nonzero)


def _draw_coeff(rng: random.Random) -> int:
    # integer coefficients from a full residue system mod 8
    return _draw(rng, range(-4, 4))


def _det_mod8_rows(rows) -> int:
    return intres.det_exact(IntMatrix.from_rows(rows)) % 8


# -- D: diagonal-dominant product lemma --------------------------------------

def gen_d_instance(seed: int, size: int) -> LemmaInstance:
    """Random matrix with even off-diagonal pairs multiplying to 0 mod 8."""
    if size < 1:
        raise ValueError("size must be at least 1")
    rng = random.Random(seed)
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = _draw(rng, ALL_RESIDUES)
    for i in range(size):
        for j in range(i + 1, size):
            a = _draw(rng, MULT4_RESIDUES)
            b = _draw(rng, EVEN_RESIDUES)
            if rng.random() < 0.5:
                a, b = b, a
            rows[i][j], rows[j][i] = a, b
    return LemmaInstance("D", {"size": size}, seed, Mod8Matrix(tuple(map(tuple, rows))))


def check_d(instance: LemmaInstance) -> bool:
    """Re-check hypotheses, then test det = product of diagonal mod 8."""
    m = instance.matrix
    if m is None or m.n_rows != m.n_cols:
        raise HypothesisViolation("needs a square matrix")
    rows = m.rows
    n = m.n_rows
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] % 2:
                raise HypothesisViolation(f"entry ({i},{j}) is odd")
            if rows[i][j] * rows[j][i] % 8:
                raise HypothesisViolation(f"product at ({i},{j}) is not 0 mod 8")
    prod = 1
    for i in range(n):
        prod = prod * rows[i][i] % 8
    return _det_mod8_rows(rows) == prod


# -- L1: unit resultants against 2H+1 and 4H+1 -------------------------------

def gen_l1_instance(seed: int, variant: str, n: int, s: int) -> LemmaInstance:
    """Random (H, F0, F1[, F2]) with x | H, deg H = s, deg F_k < n - k*s."""
    if variant not in ("a", "b"):
        raise ValueError("variant must be 'a' or 'b'")
    if n <= 1 or s < 1:
        raise ValueError("needs n > 1 and s >= 1")
    rng = random.Random(seed)
    h = [0] + [_draw_coeff(rng) for _ in range(s - 1)]
    h.append(rng.choice([c for c in range(-4, 4) if c]))
    polys = {"h": tuple(h)}
    count = 3 if variant == "a" else 2
    for k in range(count):
        bound = n - k * s
        polys[f"f{k}"] = tuple(_draw_coeff(rng) for _ in range(max(bound, 0)))
    return LemmaInstance("L1a" if variant == "a" else "L1b",
                         {"n": n, "s": s, "variant": variant}, seed, None, polys)


def l1_pair(instance: LemmaInstance) -> tuple[IntPoly, IntPoly]:
    """Assemble the (f, g) resultant pair from the stored pieces."""
    n = instance.params["n"]
    variant = instance.params["variant"]
    xn = IntPoly.from_pairs([(n, 1)])
    h = IntPoly(instance.polys["h"])
    fs = [IntPoly(instance.polys.get(f"f{k}", ())) for k in range(3)]
    two = IntPoly([2])
    four = IntPoly([4])
    if variant == "a":
        f = xn + four * fs[0] + two * fs[1] + fs[2]
        g = two * h + IntPoly([1])
    else:
        f = xn + two * fs[0] + fs[1]
        g = four * h + IntPoly([1])
    return f, g


def check_l1(instance: LemmaInstance) -> bool:
    """Re-check shapes and degree bounds, then test res(f, g) = 1 mod 8."""
    n = instance.params["n"]
    s = instance.params["s"]
    variant = instance.params["variant"]
    if n <= 1 or s < 1:
        raise HypothesisViolation("needs n > 1 and s >= 1")
    h = IntPoly(instance.polys["h"])
    if h.is_zero or h.coeff(0) != 0:
        raise HypothesisViolation("H must be divisible by x")
    if h.degree != s:
        raise HypothesisViolation(f"deg H = {h.degree}, hypotheses want exactly {s}")
    count = 3 if variant == "a" else 2
    for k in range(count):
        fk = IntPoly(instance.polys.get(f"f{k}", ()))
        if not fk.is_zero and fk.degree >= n - k * s:
            raise HypothesisViolation(f"deg F{k} = {fk.degree} breaks deg < {n - k * s}")
    f, g = l1_pair(instance)
    return intres.resultant(f, g) % 8 == 1


# -- L2: block matrix with unit diagonal -------------------------------------

def gen_l2_matrix(seed: int, m: int, n: int) -> LemmaInstance:
    """Random (m+n) x (m+n) block instance; m = 0 degenerates to lemma D shape."""
    if not 0 <= m < n:
        raise ValueError("needs 0 <= m < n")
    rng = random.Random(seed)
    size = m + n
    rows = [[0] * size for _ in range(size)]
    for i in range(m):  # A block, upper triangular, unit diagonal
        rows[i][i] = 1
        for j in range(i + 1, m):
            rows[i][j] = _draw(rng, EVEN_RESIDUES if (i + j) % 2 else ALL_RESIDUES)
    for i in range(m):  # B block
        for r in range(n):
            constrained = r <= i and (i + r) % 2 == 0
            rows[i][m + r] = _draw(rng, EVEN_RESIDUES if constrained else ALL_RESIDUES)
    for i in range(m):  # C block occupies the top rows under A
        for j in range(i, m):
            if (i + j) % 2 == 0:
                rows[m + i][j] = _draw(rng, MULT4_RESIDUES)
    for k in range(n):  # D block
        rows[m + k][m + k] = 1
        for l in range(n):
            if l != k:
                rows[m + k][m + l] = _draw(rng, MULT4_RESIDUES)
    return LemmaInstance("L2", {"m": m, "n": n}, seed, Mod8Matrix(tuple(map(tuple, rows))))


def check_l2(instance: LemmaInstance) -> bool:
    """Re-check the five block conditions, then test det = 1 mod 8."""
    m = instance.params["m"]
    n = instance.params["n"]
    mat = instance.matrix
    if mat is None:
        raise HypothesisViolation("matrix instance required")
    if not 0 <= m < n or mat.n_rows != m + n or mat.n_cols != m + n:
        raise HypothesisViolation("shape does not match m and n")
    rows = mat.rows
    for i in range(m + n):
        if rows[i][i] != 1:
            raise HypothesisViolation(f"diagonal entry {i} is not 1")
    for i in range(m):
        for j in range(m):
            if j < i and rows[i][j]:
                raise HypothesisViolation(f"A is not upper triangular at ({i},{j})")
            if j > i and (i + j) % 2 and rows[i][j] % 2:
                raise HypothesisViolation(f"A entry ({i},{j}) must be even")
    for i in range(m):
        for r in range(n):
            if r <= i and (i + r) % 2 == 0 and rows[i][m + r] % 2:
                raise HypothesisViolation(f"B entry ({i},{r}) must be even")
    for i in range(n):
        for j in range(m):
            v = rows[m + i][j]
            if i >= m:
                if v:
                    raise HypothesisViolation(f"zero block entry ({i},{j}) is nonzero")
                continue
            if j < i and v:
                raise HypothesisViolation(f"C is not upper triangular at ({i},{j})")
            if v % 4:
                raise HypothesisViolation(f"C entry ({i},{j}) must be 0 mod 4")
            if (i + j) % 2 and v:
                raise HypothesisViolation(f"C entry ({i},{j}) must vanish for odd index sum")
    for k in range(n):
        for l in range(n):
            if k != l and rows[m + k][m + l] % 4:
                raise HypothesisViolation(f"D entry ({k},{l}) must be 0 mod 4")
    return _det_mod8_rows(rows) == 1


# -- GENERAL: the offset congruence ladder ------------------------------------

def _general_sizes(n: int) -> tuple[int, int]:
    if n < 5 or n % 2 == 0:
        raise ValueError("needs odd n >= 5")
    return n - 4, (n - 1) // 3


def _x_offset_free(k: int, n: int, s: int) -> bool:
    # row support of the upper block: multiples of 4 early, evens late, plus n
    if 0 <= k < n - s:
        return k % 4 == 0
    if n - s <= k < n:
        return k % 2 == 0
    return k == n


def _y_admissible(k: int, i1: int, m: int, n: int, s: int):
    """Admissible residues for a lower-block entry at offset k, 1-based row i1."""
    if k < 0:
        return (0,)
    if k == m:
        return (1,)
    if k < m - s:
        return MULT4_RESIDUES if k % 4 == 0 else (0,)
    if k < m + n - 2 * s:
        if k % 4 == 2:
            return EVEN_RESIDUES
        if k % 4 == 0:
            return MULT4_RESIDUES
        # k odd from here on
        return MULT4_RESIDUES if i1 + k > m else (0,)
    return EVEN_RESIDUES


def gen_general_matrix(seed: int, n: int) -> LemmaInstance:
    """Random (m+n) x (m+n) instance, m = n - 4, s = (n-1)//3."""
    m, s = _general_sizes(n)
    rng = random.Random(seed)
    size = m + n
    rows = [[0] * size for _ in range(size)]
    for i in range(m):
        rows[i][i] = 1
        for j in range(size):
            k = j - i
            if k != 0 and _x_offset_free(k, n, s):
                rows[i][j] = _draw(rng, ALL_RESIDUES)
    for r in range(n):
        for j in range(size):
            k = j - r
            choices = _y_admissible(k, r + 1, m, n, s)
            rows[m + r][j] = choices[0] if len(choices) == 1 else _draw(rng, choices)
    return LemmaInstance(
        "GENERAL", {"n": n, "m": m, "s": s}, seed, Mod8Matrix(tuple(map(tuple, rows))),
        notes="column offset m is the unit diagonal; the congruence ladder does not apply there")


def general_hypothesis_violations(rows, n: int) -> list[str]:
    """All hypothesis failures of a candidate GENERAL matrix, empty if none."""
    m, s = _general_sizes(n)
    size = m + n
    problems = []
    if len(rows) != size or any(len(r) != size for r in rows):
        return [f"shape is not {size} x {size}"]
    for i in range(m):
        for j in range(size):
            k = j - i
            v = rows[i][j]
            if k == 0:
                if v != 1:
                    problems.append(f"upper diagonal entry {i} is {v}, not 1")
            elif not _x_offset_free(k, n, s) and v:
                problems.append(f"upper block entry ({i},{j}) at offset {k} must vanish")
    for r in range(n):
        for j in range(size):
            k = j - r
            v = rows[m + r][j]
            allowed = _y_admissible(k, r + 1, m, n, s)
            if v not in allowed:
                problems.append(
                    f"lower block entry ({r},{j}) at offset {k} is {v}, admissible {allowed}")
    return problems


def check_general(instance: LemmaInstance) -> bool:
    """Re-check the offset ladder, then test det = 1 mod 8."""
    n = instance.params["n"]
    mat = instance.matrix
    if mat is None:
        raise HypothesisViolation("matrix instance required")
    problems = general_hypothesis_violations(mat.rows, n)
    if problems:
        raise HypothesisViolation("; ".join(problems[:3]))
    return _det_mod8_rows(mat.rows) == 1


# -- campaign driver -----------------------------------------------------------

_CHECKERS = {"D": check_d, "L1a": check_l1, "L1b": check_l1,
             "L2": check_l2, "GENERAL": check_general}

_L1_PAIRS = ((5, 1), (8, 2), (12, 3), (16, 3))
_GENERAL_DEGREES = (5, 7, 9, 11)


def instance_seed(campaign_seed: int, label: str, index: int) -> int:
    """Stable per-instance seed derived from the campaign seed."""
    h = hashlib.blake2b(f"{campaign_seed}:{label}:{index}".encode(), digest_size=8)
    return int.from_bytes(h.digest(), "big")


def build_instance(lemma_id: str, campaign_seed: int, index: int,
                   n: int | None = None, s: int | None = None,
                   m: int | None = None) -> LemmaInstance:
    """Instance number index of a campaign, sized by the default schedule.

    D cycles sizes 2..8; L1 cycles (n, s) over the standard pairs unless
    pinned; L2 draws 0 <= m < n with m + n <= 12; GENERAL cycles odd
    degrees 5, 7, 9, 11 unless pinned.
    """
    if lemma_id not in LEMMA_IDS:
        raise ValueError(f"unknown lemma id '{lemma_id}'")
    seed = instance_seed(campaign_seed, lemma_id, index)
    if lemma_id == "D":
        size = m if m is not None else 2 + index % 7
        return gen_d_instance(seed, size)
    if lemma_id in ("L1a", "L1b"):
        if n is None or s is None:
            n, s = _L1_PAIRS[index % len(_L1_PAIRS)]
        return gen_l1_instance(seed, "a" if lemma_id == "L1a" else "b", n, s)
    if lemma_id == "L2":
        if m is None or n is None:
            rng = random.Random(seed ^ 0x5F5F)
            n = rng.randint(1, 11)
            m = rng.randint(0, min(n - 1, 12 - n))
        return gen_l2_matrix(seed, m, n)
    if n is None:
        n = _GENERAL_DEGREES[index % len(_GENERAL_DEGREES)]
    return gen_general_matrix(seed, n)


@dataclass
class FuzzResult:
    lemma_id: str
    trials: int
    checked: int
    failure: LemmaInstance | None

    @property
    def ok(self) -> bool:
        return self.failure is None


def run_fuzz(lemma_id: str, trials: int, campaign_seed: int, *,
             n: int | None = None, s: int | None = None, m: int | None = None,
             jobs: int = 1) -> FuzzResult:
    """Run a fuzz campaign; aborts at the first failed conclusion."""
    if jobs > 1:
        return _run_fuzz_parallel(lemma_id, trials, campaign_seed, n=n, s=s, m=m, jobs=jobs)
    check = _CHECKERS[lemma_id]
    for index in range(trials):
        inst = build_instance(lemma_id, campaign_seed, index, n=n, s=s, m=m)
        if not check(inst):
            return FuzzResult(lemma_id, trials, index + 1, inst)
    return FuzzResult(lemma_id, trials, trials, None)


def _fuzz_chunk(args) -> tuple[int, int] | None:
    lemma_id, campaign_seed, start, stop, n, s, m = args
    check = _CHECKERS[lemma_id]
    for index in range(start, stop):
        inst = build_instance(lemma_id, campaign_seed, index, n=n, s=s, m=m)
        if not check(inst):
            return index, inst.seed
    return None


def _run_fuzz_parallel(lemma_id, trials, campaign_seed, *, n, s, m, jobs) -> FuzzResult:
    from concurrent.futures import ProcessPoolExecutor

    bounds = [(trials * w // jobs, trials * (w + 1) // jobs) for w in range(jobs)]
    tasks = [(lemma_id, campaign_seed, lo, hi, n, s, m) for lo, hi in bounds if lo < hi]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        hits = [h for h in pool.map(_fuzz_chunk, tasks) if h is not None]
    if not hits:
        return FuzzResult(lemma_id, trials, trials, None)
    index = min(h[0] for h in hits)
    inst = build_instance(lemma_id, campaign_seed, index, n=n, s=s, m=m)
    return FuzzResult(lemma_id, trials, index + 1, inst)


def recheck(instance: LemmaInstance) -> bool:
    """Run the matching checker on a stored instance."""
    if instance.lemma_id not in _CHECKERS:
        raise ValueError(f"unknown lemma id '{instance.lemma_id}'")
    return _CHECKERS[instance.lemma_id](instance)


def write_replay(path, instance: LemmaInstance) -> None:
    """Serialize a counterexample (or any instance) for later replay."""
    Path(path).write_text(json.dumps(instance.to_json(), indent=2) + "\n")


def read_replay(path) -> LemmaInstance:
    return LemmaInstance.from_json(json.loads(Path(path).read_text()))
