"""Constacyclic codes stored by check set.

A code setting is the triple (F_q, n, lambda) with gcd(n, q) = 1; the
codes of exponent t live in R_{n,lambda^t} = F_q[X]/(X^n - lambda^t) and
are determined by a check set inside P_{n,lambda^t}, the residues mod nr
congruent to t mod r.  Check and generator polynomials come from the
root-of-unity tower and are cached lazily, so purely set-theoretic work
never builds a field extension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import gf
from .arith import Residue, cosets_of, factorize
from .errors import NonUnit, NotInvariant, SettingMismatch, TooLarge
from .gf import FieldElement, FieldSpec, Poly

_ENUM_LIMIT = 1 << 25
_BLOCK = 1 << 16

INFINITY = math.inf


class CodeSetting:
    """The ambient data (q, n, lambda) with its derived constants."""

    def __init__(self, field: FieldSpec, n: int, lam):
        if not isinstance(lam, FieldElement):
            lam = field.element(int(lam))
        if lam.field is not field:
            raise SettingMismatch("lambda belongs to a different field")
        if n < 1:
            raise ValueError(f"length must be positive, got {n}")
        if n % field.p == 0:
            raise ValueError(
                f"length {n} shares a factor with the characteristic {field.p}"
            )
        if lam.label == 0:
            raise ValueError("lambda must be a nonzero field element")
        self.field = field
        self.n = n
        self.lam = lam
        self._cosets: dict[int, object] = {}

    @property
    def q(self) -> int:
        return self.field.q

    @cached_property
    def r(self) -> int:
        return self.lam.order()

    @property
    def nr(self) -> int:
        return self.n * self.r

    @cached_property
    def _n_split(self) -> tuple[int, int]:
        n_r = 1
        for p, e in factorize(self.n):
            if self.r % p == 0:
                n_r *= p**e
        return n_r, self.n // n_r

    @property
    def n_r(self) -> int:
        """Part of n built from primes dividing r."""
        return self._n_split[0]

    @property
    def n_r_prime(self) -> int:
        """Maximal divisor of n coprime to r."""
        return self._n_split[1]

    @cached_property
    def tower(self) -> gf.FieldTower:
        return gf.build_tower(self)

    def lam_power(self, e: int) -> int:
        """Label of lambda**e (exponents live mod r)."""
        return self.field.pow(self.lam.label, e % self.r)

    def unit_check(self, t: int) -> int:
        t %= self.nr
        if math.gcd(t, self.nr) != 1:
            raise NonUnit(f"{t} is not a unit mod {self.nr}")
        return t

    def p_set(self, t: int = 1) -> tuple[int, ...]:
        """P_{n,lambda^t}: residues mod nr congruent to t mod r."""
        t = self.unit_check(t)
        return tuple(range(t % self.r, self.nr, self.r))

    def cosets(self, t: int = 1):
        """q-cosets partitioning P_{n,lambda^t}, cached per exponent class."""
        t = self.unit_check(t)
        key = t % self.r
        part = self._cosets.get(key)
        if part is None:
            part = cosets_of(self.p_set(t), Residue(self.q, self.nr))
            self._cosets[key] = part
        return part

    def binomial(self, t: int = 1) -> Poly:
        """X**n - lambda**t."""
        return gf.poly_x_pow_minus(self.field, self.n, self.lam_power(t))

    def _key(self):
        return (self.field, self.n, self.lam.label)

    def __eq__(self, other) -> bool:
        return isinstance(other, CodeSetting) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        lam = gf.element_to_text(self.field, self.lam.label)
        return f"CodeSetting(q={self.q}, n={self.n}, lambda={lam})"


@lru_cache(maxsize=None)
def _setting_cached(field: FieldSpec, n: int, lam_label: int) -> CodeSetting:
    return CodeSetting(field, n, lam_label)


def make_setting(q: int, n: int, lam) -> CodeSetting:
    """Convenience constructor from the field order."""
    field = gf.field_for_order(q)
    if isinstance(lam, str):
        lam = gf.element_from_text(field, lam)
    elif isinstance(lam, FieldElement):
        lam = lam.label
    return _setting_cached(field, n, int(lam))


@dataclass(frozen=True, eq=False)
class IndexSet:
    """A q-closed subset of P_{n,lambda^t}, the check-set currency.

    Elements are sorted residues mod nr, all congruent to t mod r and
    closed under multiplication by q.
    """

    setting: CodeSetting
    t: int
    elems: tuple[int, ...]

    def __post_init__(self):
        st = self.setting
        t = st.unit_check(self.t)
        object.__setattr__(self, "t", t)
        elems = tuple(sorted({x % st.nr for x in self.elems}))
        object.__setattr__(self, "elems", elems)
        tr = t % st.r
        for x in elems:
            if x % st.r != tr:
                raise ValueError(
                    f"residue {x} lies outside P for exponent {t} (mod {st.nr})"
                )
        if {(st.q * x) % st.nr for x in elems} != set(elems):
            raise NotInvariant("set is not closed under multiplication by q")

    def ambient(self) -> tuple[int, ...]:
        return self.setting.p_set(self.t)

    def complement(self) -> "IndexSet":
        rest = sorted(set(self.ambient()) - set(self.elems))
        return IndexSet(self.setting, self.t, tuple(rest))

    def scale(self, u: int) -> "IndexSet":
        st = self.setting
        u = st.unit_check(u)
        return IndexSet(
            st, (u * self.t) % st.nr, tuple((u * x) % st.nr for x in self.elems)
        )

    def negate(self) -> "IndexSet":
        return self.scale(self.setting.nr - 1 if self.setting.nr > 1 else 0)

    def union(self, other: "IndexSet") -> "IndexSet":
        self._same_ambient(other)
        return IndexSet(self.setting, self.t, self.elems + other.elems)

    def intersection(self, other: "IndexSet") -> "IndexSet":
        self._same_ambient(other)
        return IndexSet(
            self.setting, self.t, tuple(set(self.elems) & set(other.elems))
        )

    def _same_ambient(self, other: "IndexSet") -> None:
        if self.setting != other.setting or self.t % self.setting.r != (
            other.t % other.setting.r
        ):
            raise SettingMismatch("index sets live in different algebras")

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, x: int) -> bool:
        return x % self.setting.nr in self.elems

    def _key(self):
        return (self.setting, self.t % self.setting.r, self.elems)

    def __eq__(self, other) -> bool:
        return isinstance(other, IndexSet) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"IndexSet(t={self.t}, {list(self.elems)})"


class ConstaCode:
    """A lambda^t-constacyclic code, canonically its check set."""

    def __init__(self, check: IndexSet):
        self.check = check

    @property
    def setting(self) -> CodeSetting:
        return self.check.setting

    @property
    def t(self) -> int:
        return self.check.t

    @property
    def dim(self) -> int:
        return len(self.check.elems)

    @cached_property
    def check_poly(self) -> Poly:
        return gf.poly_from_root_set(self.setting.tower, self.check)

    @cached_property
    def gen_poly(self) -> Poly:
        return gf.poly_from_root_set(self.setting.tower, self.check.complement())

    def __eq__(self, other) -> bool:
        return isinstance(other, ConstaCode) and self.check == other.check

    def __hash__(self) -> int:
        return hash(self.check)

    def __repr__(self) -> str:
        return (
            f"ConstaCode[{self.setting.n},{self.dim}]"
            f"(t={self.t}, check={list(self.check.elems)})"
        )


def code_from_check_set(check: IndexSet) -> ConstaCode:
    return ConstaCode(check)


@dataclass(frozen=True)
class Codeword:
    """A length-n word over F_q, identified with its polynomial."""

    setting: CodeSetting
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.setting.n:
            raise SettingMismatch(
                f"word length {len(self.coords)} != n = {self.setting.n}"
            )
        q = self.setting.q
        if any(not 0 <= c < q for c in self.coords):
            raise ValueError("coordinate out of field range")

    def poly(self) -> Poly:
        return Poly(self.setting.field, self.coords)

    def weight(self) -> int:
        return sum(1 for c in self.coords if c)


def word_from_poly(setting: CodeSetting, poly: Poly) -> Codeword:
    if poly.field is not setting.field:
        raise SettingMismatch("polynomial over the wrong field")
    if poly.degree >= setting.n:
        raise ValueError("polynomial degree exceeds the code length")
    cs = poly.coeffs + (0,) * (setting.n - len(poly.coeffs))
    return Codeword(setting, cs)


def contains(code: ConstaCode, word: Codeword) -> bool:
    """Membership: the generator polynomial divides the word."""
    if word.setting != code.setting:
        raise SettingMismatch("word and code from different settings")
    return code.gen_poly.divides(word.poly())


def hamming_weight(word: Codeword) -> int:
    return word.weight()


def inner_product(a: Codeword, b: Codeword) -> FieldElement:
    if a.setting != b.setting:
        raise SettingMismatch("words from different settings")
    F = a.setting.field
    acc = 0
    for x, y in zip(a.coords, b.coords):
        acc = F.add(acc, F.mul(x, y))
    return F.element(acc)


def ring_mul(
    setting: CodeSetting, t: int, a: tuple[int, ...], b: tuple[int, ...]
) -> tuple[int, ...]:
    """Product of two words in R_{n,lambda^t}."""
    F = setting.field
    n = setting.n
    lam_t = setting.lam_power(t)
    if F.m == 1:
        p = F.p
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = [0] * n
        for i in range(n):
            out[i] = prod[i] % p
        for i in range(n, 2 * n - 1):
            c = prod[i] % p
            if c:
                out[i - n] = (out[i - n] + c * lam_t) % p
        return tuple(out)
    prod = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = F.add(prod[i + j], F.mul(ai, bj))
    out = list(prod[:n])
    for i in range(n, 2 * n - 1):
        if prod[i]:
            out[i - n] = F.add(out[i - n], F.mul(prod[i], lam_t))
    return tuple(out)


def spanning_words(code: ConstaCode) -> list[Codeword]:
    """X**j * generator for j < dim; a basis of the code."""
    n = code.setting.n
    g = code.gen_poly.coeffs
    out = []
    for j in range(code.dim):
        cs = (0,) * j + g
        out.append(Codeword(code.setting, cs + (0,) * (n - len(cs))))
    return out


@dataclass(frozen=True)
class IsometryDesc:
    """Monomial form of the weight-preserving map X -> X**tbar.

    For tbar*i = n*q_i + t_i the word map sends coordinate i to position
    t_i scaled by lambda**(t*q_i) (or lambda**(u*t*q_i) when the source
    algebra has exponent u).
    """

    setting: CodeSetting
    t: int
    tbar: int
    perm: tuple[int, ...]
    qs: tuple[int, ...]

    @property
    def scalars(self) -> tuple[int, ...]:
        return self.scalars_for(1)

    def scalars_for(self, src_t: int) -> tuple[int, ...]:
        st = self.setting
        return tuple(st.lam_power(src_t * self.t * qi) for qi in self.qs)

    def apply_word(self, coords, src_t: int = 1) -> tuple[int, ...]:
        st = self.setting
        F = st.field
        out = [0] * st.n
        for i, (pi, sc) in enumerate(zip(self.perm, self.scalars_for(src_t))):
            out[pi] = F.mul(coords[i], sc)
        return tuple(out)

    def apply_poly(self, poly: Poly, src_t: int = 1) -> Poly:
        coords = poly.coeffs + (0,) * (self.setting.n - len(poly.coeffs))
        return Poly(self.setting.field, self.apply_word(coords, src_t))


def isometry(setting: CodeSetting, t: int) -> IsometryDesc:
    """The isometry of exponent t, with its permutation/scalar data."""
    t = setting.unit_check(t)
    nr = setting.nr
    tbar = pow(t, -1, nr)
    n = setting.n
    perm = []
    qs = []
    for i in range(n):
        qi, ti = divmod(tbar * i, n)
        perm.append(ti)
        qs.append(qi)
    return IsometryDesc(setting, t, tbar, tuple(perm), tuple(qs))


def apply_isometry(iso: IsometryDesc, code: ConstaCode) -> ConstaCode:
    """Image code: check set scaled by t, exponent multiplied by t."""
    if iso.setting != code.setting:
        raise SettingMismatch("isometry and code from different settings")
    return ConstaCode(code.check.scale(iso.t))


def annihilator(code: ConstaCode) -> ConstaCode:
    """Code with the complementary check set; products with code vanish."""
    return ConstaCode(code.check.complement())


def dual(code: ConstaCode) -> ConstaCode:
    """Euclidean dual: a lambda^(-t) code with check set -(complement)."""
    return ConstaCode(code.check.complement().negate())


def min_distance(code: ConstaCode) -> float | int:
    """Exact minimum Hamming weight by message-space enumeration.

    Scans one representative per scalar class (messages whose leading
    nonzero coefficient is 1), which is exhaustive because scaling a
    codeword does not change its weight.
    """
    k = code.dim
    if k == 0:
        return INFINITY
    st = code.setting
    q, n = st.q, st.n
    if q**k > _ENUM_LIMIT:
        raise TooLarge(f"{q}^{k} codewords exceed the enumeration cap")
    g = code.gen_poly.coeffs
    gw = sum(1 for c in g if c)
    if k == 1:
        return gw
    if q <= gf._NP_TABLE_LIMIT:
        return _min_distance_np(st, g, k)
    # q above table range forces k <= 2 under the enumeration cap, so the
    # monic messages are (1,) and (a, 1) for a in F_q
    F = st.field
    best = gw
    for a in range(q):
        word = [0] * (len(g) + 1)
        for j, c in enumerate(g):
            word[j] = F.add(word[j], F.mul(a, c))
            word[j + 1] = F.add(word[j + 1], c)
        w = sum(1 for c in word if c)
        if w < best:
            best = w
    return best


def _min_distance_np(st: CodeSetting, g: tuple[int, ...], k: int) -> int:
    import numpy as np

    add_t, mul_t = st.field.np_tables()
    q, n = st.q, st.n
    rows = np.zeros((k, n), dtype=np.int16)
    for j in range(k):
        rows[j, j : j + len(g)] = g
    best = n + 1
    for lead in range(k):
        total = q**lead
        base_row = rows[lead]
        start = 0
        while start < total:
            stop = min(start + _BLOCK, total)
            idx = np.arange(start, stop, dtype=np.int64)
            acc = np.broadcast_to(base_row, (stop - start, n)).copy()
            for j in range(lead):
                digits = ((idx // (q**j)) % q).astype(np.int16)
                term = mul_t[digits[:, None], rows[j][None, :]]
                acc = add_t[acc, term]
            w = int(np.count_nonzero(acc, axis=1).min())
            if w < best:
                best = w
            start = stop
    return best


def distance_lower_bound(code: ConstaCode) -> int:
    """Consecutive-root bound from the defining set.

    Walking P_{n,lambda^t} in arithmetic-progression order, a cyclic run
    of L consecutive defining-set members forces distance >= L + 1.
    """
    st = code.setting
    defining = set(code.check.complement().elems)
    t = code.t % st.r
    seq = [(t + st.r * i) % st.nr in defining for i in range(st.n)]
    if all(seq):
        return st.n + 1
    # longest cyclic run of True
    doubled = seq + seq
    best = run = 0
    for flag in doubled:
        run = run + 1 if flag else 0
        best = max(best, run)
    return min(best, st.n) + 1


def code_report(code: ConstaCode, distance=None) -> dict:
    """JSON-ready summary of a code; distance entry is caller-supplied."""
    st = code.setting
    report = {
        "q": st.q,
        "n": st.n,
        "r": st.r,
        "lambda": gf.element_to_text(st.field, st.lam.label),
        "t": code.t,
        "check_set": list(code.check.elems),
        "dimension": code.dim,
        "check_poly": gf.poly_to_text(code.check_poly),
        "generator_poly": gf.poly_to_text(code.gen_poly),
    }
    if distance is not None:
        report["min_distance"] = "inf" if distance == INFINITY else int(distance)
    return report
