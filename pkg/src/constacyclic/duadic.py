"""Duadic splittings of constacyclic index sets.

The distinguished subset P0 (residues divisible by the r-coprime part
of n), Type-I and Type-II splitting existence and construction,
certificate verification, odd-like companion codes, iso-orthogonality,
and an exhaustive maximal iso-orthogonal dimension search.

Constructions are deterministic: CRT components are the least residues
satisfying each case's order conditions, and orbit pairing always walks
orbits from their least representative.  Existence verdicts depend only
on (q, n, r); witnesses are produced for exponent t = 1 and other
exponents are reached by scaling with a unit multiplier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import gf
from .arith import (
    CrtFrame,
    Residue,
    _mult_order,
    cosets_of,
    crt_compose,
    factorize,
    nu2,
    orbits_on_cosets,
    pair_even_orbits,
)
from .codes import CodeSetting, ConstaCode, IndexSet, make_setting
from .errors import Internal, NonUnit, NoSplitting, TooLarge
from .gf import Poly


class SplittingKind(str, Enum):
    TYPE_I = "type-i"
    TYPE_II = "type-ii"


@dataclass(frozen=True)
class Splitting:
    """A certified multiplier splitting (s, P, sP) of P_{n,lambda^t}."""

    setting: CodeSetting
    t: int
    s: int
    p: IndexSet
    sp: IndexSet
    kind: SplittingKind

    def codes(self) -> tuple[ConstaCode, ConstaCode]:
        return ConstaCode(self.p), ConstaCode(self.sp)


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    skipped: bool = False


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    checks: tuple[CheckEntry, ...]
    first_failure: str | None = None

    def as_json(self) -> list[dict]:
        out = []
        for c in self.checks:
            entry = {"name": c.name, "pass": bool(c.passed)}
            if c.skipped:
                entry["skipped"] = True
            out.append(entry)
        return out


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool
    reason: str
    witness: Splitting | None = None


@lru_cache(maxsize=None)
def _multiplier_group_cached(setting: CodeSetting) -> tuple[int, ...]:
    nr, r = setting.nr, setting.r
    return tuple(
        x for x in range(1 % r, nr, r) if math.gcd(x, nr) == 1
    )


def multiplier_group(setting: CodeSetting) -> tuple[int, ...]:
    """G_{n,r}: units mod nr congruent to 1 mod r, sorted ascending."""
    return _multiplier_group_cached(setting)


def p0_set(setting: CodeSetting, t: int = 1) -> IndexSet:
    """Members of P_{n,lambda^t} divisible by the r-coprime part of n."""
    npp = setting.n_r_prime
    elems = tuple(x for x in setting.p_set(t) if x % npp == 0)
    return IndexSet(setting, t, elems)


def c0_check_poly(setting: CodeSetting, t: int = 1) -> Poly:
    """Closed form X**n_r - lambda**(t / n_r_prime mod r) for f_{P0}."""
    r = setting.r
    nbar = pow(setting.n_r_prime, -1, r)
    c = setting.lam_power(t * nbar)
    return gf.poly_x_pow_minus(setting.field, setting.n_r, c)


def exists_type1(setting: CodeSetting) -> bool:
    """Whether the quotient of 1 + r*Z_{n_r*r} by powers of q has even order."""
    m = setting.n_r * setting.r
    ordq = _mult_order(setting.q % m, m)
    if setting.n_r % ordq != 0:
        raise Internal("order of q does not divide the subgroup order")
    return (setting.n_r // ordq) % 2 == 0


def _is_square_mod(a: int, m: int) -> bool:
    a %= m
    return any((x * x) % m == a for x in range(m)) or m == 1


def _exists_reason(setting: CodeSetting) -> str | None:
    if exists_type1(setting):
        return "TypeI-even-quotient"
    if setting.n_r % 2 == 0:
        return "n_r-even"
    if setting.n % 2 == 1 and _is_square_mod(setting.q, setting.n_r_prime):
        return "odd-square"
    return None


def exists_type2(setting: CodeSetting, *, with_witness: bool = True) -> ExistenceVerdict:
    """Existence verdict for Type-II splittings, with a certified witness."""
    reason = _exists_reason(setting)
    if reason is None:
        return ExistenceVerdict(False, "none", None)
    if not with_witness:
        return ExistenceVerdict(True, reason, None)
    witness = construct_type2(setting)
    res = verify_splitting(witness, algebraic=False)
    if not res.ok:
        raise Internal(f"constructed witness failed check {res.first_failure}")
    return ExistenceVerdict(True, reason, witness)


# ---------------------------------------------------------------------------
# constructions


def _compose_multiplier(setting: CodeSetting, r_side: int, odd_parts: dict[int, int]) -> int:
    """CRT-glue a multiplier: r_side on prime powers of n_r*r, s_i elsewhere."""
    nr = setting.nr
    if nr == 1:
        return 0
    frame = CrtFrame.from_modulus(nr)
    parts = []
    for w in frame.factors:
        p = frame.prime_of(w)
        if setting.r % p == 0:
            parts.append(r_side % w)
        else:
            parts.append(odd_parts[w] % w)
    return crt_compose(parts, frame).value


def _even_case_components(setting: CodeSetting) -> dict[int, int]:
    """Least 2-power-order components at each prime power of n_r_prime.

    At w = p**v the component is the unique element of order 2 when q
    has odd order mod w, and otherwise the least odd power of q whose
    order is a positive power of 2.
    """
    q = setting.q
    out = {}
    for p, v in factorize(setting.n_r_prime):
        w = p**v
        ordq = _mult_order(q % w, w)
        if ordq % 2 == 1:
            out[w] = w - 1
        else:
            a = nu2(ordq)
            base = pow(q, ordq >> a, w)
            cands = {pow(base, e, w) for e in range(1, 1 << a, 2)}
            out[w] = min(cands)
    return out


def _odd_case_components(setting: CodeSetting) -> dict[int, int]:
    """Square roots of q with one extra factor of 2 in their order."""
    q = setting.q
    out = {}
    for p, v in factorize(setting.n_r_prime):
        w = p**v
        target = nu2(_mult_order(q % w, w)) + 1
        cands = [
            x
            for x in range(1, w)
            if x % p != 0
            and (x * x) % w == q % w
            and nu2(_mult_order(x, w)) == target
        ]
        if not cands:
            raise NoSplitting(
                f"no admissible square root of q mod {w}; "
                "existence precondition violated"
            )
        out[w] = min(cands)
    return out


def construct_type1(setting: CodeSetting) -> Splitting:
    """Deterministic Type-I splitting, when one exists."""
    if not exists_type1(setting):
        raise NoSplitting("no Type-I splitting for this setting")
    m = setting.n_r * setting.r
    q = setting.q
    qpow = set()
    x = 1 % m
    while x not in qpow:
        qpow.add(x)
        x = (x * q) % m
    s0 = None
    for x in range(1 % m, m, setting.r):
        if x not in qpow and (x * x) % m in qpow:
            s0 = x
            break
    if s0 is None:
        raise Internal("even quotient without an order-2 class")
    s = _compose_multiplier(
        setting, s0, {w: 1 for w in _odd_prime_powers(setting)}
    )
    part = setting.cosets(1)
    orbits = orbits_on_cosets(part, Residue(s, setting.nr))
    pairing = pair_even_orbits(orbits)
    if pairing is None:
        raise Internal("Type-I multiplier produced an odd orbit")
    return _splitting_from_pairing(setting, s, part, pairing[0], SplittingKind.TYPE_I)


def _odd_prime_powers(setting: CodeSetting) -> list[int]:
    return [p**v for p, v in factorize(setting.n_r_prime)]


def _splitting_from_pairing(setting, s, part, reps, kind) -> Splitting:
    nr = setting.nr
    p_elems = []
    for rep in reps:
        p_elems.extend(part.coset_of(rep))
    p_idx = IndexSet(setting, 1, tuple(p_elems))
    sp_idx = IndexSet(setting, 1, tuple((s * x) % nr for x in p_elems))
    return Splitting(setting, 1, s, p_idx, sp_idx, kind)


def construct_type2(setting: CodeSetting) -> Splitting:
    """Deterministic Type-II (even-like) splitting, when one exists."""
    reason = _exists_reason(setting)
    if reason is None:
        raise NoSplitting("no Type-II splitting for this setting")
    nr = setting.nr
    p0 = set(p0_set(setting, 1).elems)
    if reason == "TypeI-even-quotient":
        base = construct_type1(setting)
        s = base.s
        p_elems = tuple(x for x in base.p.elems if x not in p0)
        p_idx = IndexSet(setting, 1, p_elems)
        sp_idx = IndexSet(setting, 1, tuple((s * x) % nr for x in p_elems))
        out = Splitting(setting, 1, s, p_idx, sp_idx, SplittingKind.TYPE_II)
    else:
        if reason == "n_r-even":
            comps = _even_case_components(setting)
        else:
            comps = _odd_case_components(setting)
        s = _compose_multiplier(setting, 1, comps)
        outside = tuple(x for x in setting.p_set(1) if x not in p0)
        part = cosets_of(outside, Residue(setting.q, nr)) if outside else None
        if part is None:
            out = Splitting(
                setting,
                1,
                s,
                IndexSet(setting, 1, ()),
                IndexSet(setting, 1, ()),
                SplittingKind.TYPE_II,
            )
        else:
            orbits = orbits_on_cosets(part, Residue(s, nr))
            pairing = pair_even_orbits(orbits)
            if pairing is None:
                raise Internal("Type-II multiplier produced an odd orbit")
            out = _splitting_from_pairing(
                setting, s, part, pairing[0], SplittingKind.TYPE_II
            )
    res = verify_splitting(out, algebraic=False)
    if not res.ok:
        raise Internal(f"constructed splitting failed check {res.first_failure}")
    return out


# ---------------------------------------------------------------------------
# verification


def verify_splitting(sp: Splitting, algebraic="auto") -> VerifyResult:
    """Re-prove every splitting invariant, set-wise and polynomially.

    algebraic may be True (always multiply the factor polynomials),
    False (set checks only), or "auto" (multiply when the required
    extension field fits the size cap, otherwise record a skip).
    """
    return _verify(
        sp.setting, sp.t, sp.s, sp.p.elems, sp.sp.elems, sp.kind, algebraic
    )


def verify_sets(
    setting: CodeSetting,
    t: int,
    s: int,
    p_elems,
    sp_elems,
    kind: SplittingKind,
    algebraic="auto",
) -> VerifyResult:
    """Like verify_splitting but on raw residue lists (certificate input)."""
    return _verify(setting, t, s, tuple(p_elems), tuple(sp_elems), kind, algebraic)


def _verify(setting, t, s, p_elems, sp_elems, kind, algebraic) -> VerifyResult:
    checks: list[CheckEntry] = []

    def add(name: str, passed: bool, skipped: bool = False):
        checks.append(CheckEntry(name, passed, skipped))

    nr, r, q = setting.nr, setting.r, setting.q
    t %= nr
    s %= nr
    p = {x % nr for x in p_elems}
    sps = {x % nr for x in sp_elems}
    ambient = set(setting.p_set(t)) if math.gcd(t, nr) == 1 else set()

    add("t-unit", math.gcd(t, nr) == 1)
    add(
        "s-in-multiplier-group",
        math.gcd(s, nr) == 1 and s % r == 1 % r,
    )
    add("p-in-ambient", p <= ambient)
    add("sp-in-ambient", sps <= ambient)
    add("p-mu-q-invariant", {(q * x) % nr for x in p} == p)
    add("sp-mu-q-invariant", {(q * x) % nr for x in sps} == sps)
    add("sp-equals-s-times-p", {(s * x) % nr for x in p} == sps)
    p0 = {x for x in ambient if x % setting.n_r_prime == 0}
    if kind == SplittingKind.TYPE_II:
        add(
            "parts-disjoint",
            not (p & sps) and not (p0 & p) and not (p0 & sps),
        )
        add("parts-cover", (p0 | p | sps) == ambient)
    else:
        add("parts-disjoint", not (p & sps))
        add("parts-cover", (p | sps) == ambient)
    add("s-squared-fixes-p", {(s * s * x) % nr for x in p} == p)

    set_ok = all(c.passed for c in checks)
    if algebraic is False or not set_ok:
        add("factor-product-identity", set_ok, skipped=True)
    else:
        tower = None
        try:
            tower = setting.tower
        except TooLarge:
            if algebraic != "auto":
                raise
        if tower is None:
            add("factor-product-identity", True, skipped=True)
        else:
            prod = gf.poly_from_root_set(tower, p)
            prod = prod * gf.poly_from_root_set(tower, sps)
            if kind == SplittingKind.TYPE_II:
                prod = prod * gf.poly_from_root_set(tower, p0)
            add("factor-product-identity", prod == setting.binomial(t))

    failed = [c.name for c in checks if not c.skipped and not c.passed]
    return VerifyResult(not failed, tuple(checks), failed[0] if failed else None)


# ---------------------------------------------------------------------------
# derived codes and orthogonality


def odd_like_pair(sp: Splitting) -> tuple[ConstaCode, ConstaCode]:
    """The complementary odd-like pair (P0 + P, P0 + sP) of a Type-II splitting."""
    if sp.kind != SplittingKind.TYPE_II:
        raise ValueError("odd-like companions require a Type-II splitting")
    p0 = p0_set(sp.setting, sp.t)
    c1 = ConstaCode(sp.p.union(p0))
    c2 = ConstaCode(sp.sp.union(p0))
    whole = set(sp.setting.p_set(sp.t))
    union = set(c1.check.elems) | set(c2.check.elems)
    inter = set(c1.check.elems) & set(c2.check.elems)
    if union != whole or inter != set(p0.elems):
        raise Internal("odd-like pair does not meet the sum/intersection contract")
    return c1, c2


def is_iso_orthogonal(code: ConstaCode, t: int) -> bool:
    """Whether the exponent-t isometry maps the code into its dual."""
    st = code.setting
    nr = st.nr
    t %= nr
    if math.gcd(t, nr) != 1:
        raise NonUnit(f"{t} is not a unit mod {nr}")
    mt = (-t) % nr
    if mt % st.r != 1 % st.r:
        return False
    p = set(code.check.elems)
    return not (p & {(mt * x) % nr for x in p})


def even_dual_is_odd(sp: Splitting) -> bool:
    """Duals of an even-like pair form an odd-like pair in the inverse algebra."""
    if sp.kind != SplittingKind.TYPE_II:
        raise ValueError("requires a Type-II splitting")
    st = sp.setting
    nr = st.nr
    if sp.t % nr != 1 % nr:
        raise ValueError("stated for exponent t = 1")
    ambient = set(st.p_set(1))
    p = set(sp.p.elems)
    spx = set(sp.sp.elems)
    neg = lambda xs: {(-x) % nr for x in xs}
    a = neg(ambient - p)
    b = neg(ambient - spx)
    amb_neg = set(st.p_set(-1 % nr if nr > 1 else 0))
    p0_neg = neg(set(p0_set(st, 1).elems))
    pair_ok = {(sp.s * x) % nr for x in a} == b
    return pair_ok and (a | b) == amb_neg and (a & b) == p0_neg


@lru_cache(maxsize=None)
def _best_compatible_popcount(length: int) -> int:
    """Exhaust subsets of one multiplier cycle of cosets.

    A position set A is compatible when A and its shift by one are
    disjoint and the shift by two fixes A; the best popcount bounds the
    cosets one cycle can contribute to an iso-orthogonal check set.
    """
    full = (1 << length) - 1

    def rot(a: int, k: int) -> int:
        k %= length
        return ((a << k) | (a >> (length - k))) & full if k else a

    best = 0
    for a in range(1 << length):
        if a & rot(a, 1):
            continue
        if rot(a, 2) != a:
            continue
        best = max(best, bin(a).count("1"))
    return best


def max_iso_orthogonal_dim(setting: CodeSetting) -> int:
    """Largest dimension over all iso-orthogonal pairs, by exhaustion.

    For each multiplier s the compatible check sets factor over the
    s-cycles of q-cosets, so every cycle is exhausted independently and
    the best contributions add up.
    """
    part = setting.cosets(1)
    if len(part.cosets) > 22:
        raise TooLarge("too many cosets to exhaust iso-orthogonal pairs")
    size_of = {c[0]: len(c) for c in part.cosets}
    nr = setting.nr
    best = 0
    for s in multiplier_group(setting):
        orbits = orbits_on_cosets(part, Residue(s, nr))
        total = 0
        for orbit in orbits:
            sizes = {size_of[rep] for rep in orbit}
            if len(sizes) != 1:
                raise Internal("multiplier cycle mixes coset sizes")
            total += sizes.pop() * _best_compatible_popcount(len(orbit))
        best = max(best, total)
    return best


# ---------------------------------------------------------------------------
# certificates


def certificate(sp: Splitting, result: VerifyResult | None = None) -> dict:
    """JSON-ready splitting certificate with its verification transcript."""
    st = sp.setting
    if result is None:
        result = verify_splitting(sp)
    return {
        "q": st.q,
        "n": st.n,
        "r": st.r,
        "lambda": gf.element_to_text(st.field, st.lam.label),
        "t": sp.t,
        "s": sp.s,
        "kind": sp.kind.value,
        "P": list(sp.p.elems),
        "sP": list(sp.sp.elems),
        "P0": list(p0_set(st, sp.t).elems),
        "checks": result.as_json(),
    }


def verify_certificate(cert: dict, algebraic="auto") -> tuple[VerifyResult, dict]:
    """Re-check a certificate dict; returns the verdict and a fresh transcript."""
    setting = make_setting(int(cert["q"]), int(cert["n"]), cert["lambda"])
    t = int(cert.get("t", 1))
    s = int(cert["s"])
    kind = SplittingKind(cert.get("kind", "type-ii"))
    res = _verify(
        setting,
        t,
        s,
        tuple(int(x) for x in cert["P"]),
        tuple(int(x) for x in cert["sP"]),
        kind,
        algebraic,
    )
    checks = list(res.checks)
    if "P0" in cert:
        expected = sorted(int(x) for x in cert["P0"])
        actual = list(p0_set(setting, t).elems) if math.gcd(t, setting.nr) == 1 else []
        checks.append(CheckEntry("p0-matches", expected == actual))
    if "r" in cert:
        checks.append(CheckEntry("r-matches", int(cert["r"]) == setting.r))
    failed = [c.name for c in checks if not c.skipped and not c.passed]
    res = VerifyResult(not failed, tuple(checks), failed[0] if failed else None)
    fresh = dict(cert)
    fresh["checks"] = res.as_json()
    return res, fresh
