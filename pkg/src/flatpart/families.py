"""The catalog of registered partition identities.

Each entry pairs a product side (parts restricted to residue classes,
as a ProductSpec) with a sum side (a predicate on partitions written
straight from the identity's prose statement) and, where one exists, an
exact window encoding (ConditionSet).  Many entries also carry a
conjugate-side predicate: membership of the conjugate partition is
governed by part frequencies and counts of strictly greater parts.

Names follow the pattern FAMILY_K<k>[_I<i>] for parametrized families;
one-off classical identities have bare names (MACMAHON, SCHUR, ...).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .conditions import ConditionSet, condition_set
from .counting import sum_series_brute, sum_series_dp
from .errors import NoFlatForm, UnknownFamily
from .partitions import frequency_profile, partitions_of
from .series import IntSeries, ProductSpec

SUM = "sum"
CONJUGATE = "conjugate"
PRODUCT = "product"


@dataclass(frozen=True)
class RegisteredIdentity:
    name: str
    summary: str
    product: ProductSpec
    sum_pred: Callable
    flat: Optional[ConditionSet]
    conj_pred: Optional[Callable] = None
    # Window rules that capture the difference conditions but not the
    # initial conditions; pair with min_part for an exact fast count.
    dp_rules: Optional[ConditionSet] = None
    dp_min_part: int = 1
    family: str = ""
    params: tuple = ()

    def param(self, key, default=None):
        return dict(self.params).get(key, default)

    def count_series(self, order: int, brute_ceiling: int = 60) -> IntSeries:
        """Sum-side counting series by the fastest exact route available."""
        if self.flat is not None:
            return sum_series_dp(self.flat, order)
        if self.dp_rules is not None:
            return sum_series_dp(self.dp_rules, order, min_part=self.dp_min_part)
        return count_by_predicate(self.sum_pred, order, ceiling=brute_ceiling)

    def product_series(self, order: int) -> IntSeries:
        from .series import product_series
        return product_series(self.product, order)


def count_by_predicate(pred: Callable, order: int, ceiling: int = 60) -> IntSeries:
    from .errors import CeilingExceeded
    if order > ceiling:
        raise CeilingExceeded(
            "predicate enumeration capped at order %d, asked for %d"
            % (ceiling, order))
    return IntSeries(
        [sum(1 for p in partitions_of(n) if pred(p)) for n in range(order + 1)])


def _adjacent(parts):
    return zip(parts, parts[1:])


# ---------------------------------------------------------------- Family 1

def _fam1_lists(k: int):
    low = tuple(range(2, 3 * k - 3, 3))   # 2, 5, ..., 3k-4
    high = tuple(range(4, 3 * k - 1, 3))  # 4, 7, ..., 3k-2
    return low, high

# residue data per variant: (smaller-part residues forbidden for the low
# difference list, residue required for the high list, initial part values)
_FAM1_DATA = {
    1: ((2,), 1, lambda k: set(range(1, 3 * k - 1, 3))),
    2: ((0,), 2, lambda k: set(range(1, 3 * k - 1, 3)) | set(range(2, 3 * k - 3, 3))),
    3: ((1,), 0, lambda k: {1}),
}


def fam1_sum_pred(variant: int, k: int) -> Callable:
    low, high = _fam1_lists(k)
    forb_low, req_high, init_fn = _FAM1_DATA[variant]
    init = init_fn(k)

    def pred(parts) -> bool:
        if any(p in init for p in parts):
            return False
        for a, b in _adjacent(parts):
            d = a - b
            if d == 1:
                return False
            if d in low and (b % 3) in forb_low:
                return False
            if d in high and (b % 3) != req_high:
                return False
        return True

    return pred


def fam1_conj_pred(variant: int, k: int) -> Callable:
    low_f = set(range(2, 3 * k - 3, 3))   # frequencies 2, 5, ..., 3k-4
    high_f = set(range(4, 3 * k - 1, 3))  # frequencies 4, 7, ..., 3k-2
    forb_low, req_high, _ = _FAM1_DATA[variant]

    def pred(parts) -> bool:
        for _v, (f, g) in frequency_profile(parts).items():
            if f == 1:
                return False
            if f in low_f and (g % 3) in forb_low:
                return False
            if f in high_f and (g % 3) != req_high:
                return False
        return True

    return pred


def fam1_flat(variant: int, k: int) -> ConditionSet:
    rules = [(1, 2, 1, 2)]
    forb_low, req_high, _ = _FAM1_DATA[variant]
    for d in range(2, 3 * k - 3, 3):
        for rho in forb_low:
            t_res = (rho + d // 2) % 3
            rules.append((d // 2 + 1, 2, (2 * t_res + d % 2) % 6, 6))
    for d in range(4, 3 * k - 1, 3):
        for rho in range(3):
            if rho == req_high:
                continue
            t_res = (rho + d // 2) % 3
            rules.append((d // 2 + 1, 2, (2 * t_res + d % 2) % 6, 6))
    return condition_set(rules, zeros=1)


def fam1_product(variant: int, k: int) -> ProductSpec:
    m = 3 * k + 3
    residues = set(range(0, m, 3))
    extra = {1: (2, m - 2), 2: (m - 4, m - 2), 3: (2, 4)}[variant]
    residues.update(r % m for r in extra)
    return ProductSpec.from_residues(m, residues)


# ------------------------------------------------------------ Families 2-7
#
# Each of these pairs an even-or-one-residue product with conditions that
# forbid certain part values near an even or odd part.  The table rows are
# (modulus fn, special residue fn, sign of the residue form, the values
# banned near a part, ...); see the per-family predicates below.

def fam2_sum_pred(k: int) -> Callable:
    small = set(range(1, 2 * k, 2))

    def pred(parts) -> bool:
        if parts and parts[-1] in small:
            return False
        present = set(parts)
        for p in present:
            if p % 2 == 1:
                j = p // 2
                if any((2 * j - 2 * i) in present for i in range(k)):
                    return False
        return True

    return pred


def fam3_sum_pred(k: int) -> Callable:
    def pred(parts) -> bool:
        present = set(parts)
        for p in present:
            if p % 2 == 0:
                if any((p - 2 * i - 1) in present for i in range(k)):
                    return False
        return True

    return pred


def fam4_sum_pred(k: int) -> Callable:
    def pred(parts) -> bool:
        if parts and parts[-1] == 1:
            return False
        if any(a - b == 1 for a, b in _adjacent(parts)):
            return False
        present = set(parts)
        for p in present:
            if p % 2 == 0:
                if any((p - 2 * i - 3) in present for i in range(k)):
                    return False
        return True

    return pred


def fam5_sum_pred(k: int) -> Callable:
    small = set(range(1, 2 * k + 2, 2))

    def pred(parts) -> bool:
        if parts and parts[-1] in small:
            return False
        if any(a - b == 1 for a, b in _adjacent(parts)):
            return False
        present = set(parts)
        for p in present:
            if p % 2 == 1:
                if any((p - 2 * i - 3) in present for i in range(k)):
                    return False
        return True

    return pred


def fam6_sum_pred(k: int) -> Callable:
    small = set(range(1, 2 * k + 4, 2))
    bad_diffs = set(range(1, 2 * k + 2, 2))

    def pred(parts) -> bool:
        if parts and parts[-1] in small:
            return False
        if any(a - b in bad_diffs for a, b in _adjacent(parts)):
            return False
        present = set(parts)
        for p in present:
            if p % 2 == 1 and (p - 2 * k - 3) in present:
                return False
        return True

    return pred


def fam7_sum_pred(k: int) -> Callable:
    small = set(range(1, 2 * k + 2, 2))
    bad_diffs = set(range(1, 2 * k + 2, 2))

    def pred(parts) -> bool:
        if parts and parts[-1] in small:
            return False
        if any(a - b in bad_diffs for a, b in _adjacent(parts)):
            return False
        present = set(parts)
        for p in present:
            if p % 2 == 0 and (p - 2 * k - 3) in present:
                return False
        return True

    return pred


def _conj_odd_small(freqs, parity):
    """Parts appearing f times for odd f in `freqs` need the count of
    strictly greater parts to have the given parity."""
    def pred(parts) -> bool:
        for _v, (f, g) in frequency_profile(parts).items():
            if f in freqs and g % 2 != parity:
                return False
        return True
    return pred


def fam2_conj_pred(k): return _conj_odd_small(set(range(1, 2 * k, 2)), 1)
def fam3_conj_pred(k): return _conj_odd_small(set(range(1, 2 * k, 2)), 0)


def _conj_no_single(freqs, parity, banned):
    def pred(parts) -> bool:
        for _v, (f, g) in frequency_profile(parts).items():
            if f in banned:
                return False
            if f in freqs and g % 2 != parity:
                return False
        return True
    return pred


def fam4_conj_pred(k):
    return _conj_no_single(set(range(3, 2 * k + 2, 2)), 0, {1})


def fam5_conj_pred(k):
    return _conj_no_single(set(range(3, 2 * k + 2, 2)), 1, {1})


def fam6_conj_pred(k):
    return _conj_no_single({2 * k + 3}, 1, set(range(1, 2 * k + 2, 2)))


def fam7_conj_pred(k):
    return _conj_no_single({2 * k + 3}, 0, set(range(1, 2 * k + 2, 2)))


def fam2_flat(k):
    return condition_set(
        [(i + 1, 2, (1 - 2 * i) % 4, 4) for i in range(k)], zeros=1)


def fam3_flat(k):
    return condition_set(
        [(i + 1, 2, (-1 - 2 * i) % 4, 4) for i in range(k)], zeros=0)


def fam4_flat(k):
    return condition_set(
        [(1, 2, 1, 2)] + [(i + 2, 2, (1 - 2 * i) % 4, 4) for i in range(k)],
        zeros=1)


def fam5_flat(k):
    return condition_set(
        [(1, 2, 1, 2)] + [(i + 2, 2, (-1 - 2 * i) % 4, 4) for i in range(k)],
        zeros=1)


def fam6_flat(k):
    return condition_set(
        [(a, 2, 1, 2) for a in range(1, k + 2)]
        + [(k + 2, 2, (3 - 2 * k) % 4, 4)], zeros=1)


def fam7_flat(k):
    return condition_set(
        [(a, 2, 1, 2) for a in range(1, k + 2)]
        + [(k + 2, 2, (1 - 2 * k) % 4, 4)], zeros=1)


def _evens_plus(modulus: int, extras) -> ProductSpec:
    residues = set(range(0, modulus, 2))
    residues.update(e % modulus for e in extras)
    return ProductSpec.from_residues(modulus, residues)


# ---------------------------------------------------------------- Family 8

def fam8_sum_pred(residues, modulus: int, width: int, zeros: int) -> Callable:
    """Forbid any width-window of the zero-padded partition whose first and
    last entries differ by less than 2 and whose sum falls in the class set."""
    classes = set(r % modulus for r in residues)

    def pred(parts) -> bool:
        ext = tuple(parts) + (0,) * zeros
        for i in range(len(ext) - width + 1):
            win = ext[i:i + width]
            if win[0] == 0:
                continue
            if win[0] - win[-1] < 2 and sum(win) % modulus in classes:
                return False
        return True

    return pred


def fam8_flat(residues, modulus: int, width: int, zeros: int) -> ConditionSet:
    return condition_set(
        [(1, width, r, modulus) for r in residues], zeros=zeros)


def fam8_product(residues, modulus: int) -> ProductSpec:
    banned = set(r % modulus for r in residues)
    return ProductSpec.from_residues(
        modulus, [r for r in range(modulus) if r not in banned])


# -------------------------------------- Family 9 and its Andrews companion

def fam9_sum_pred(k: int) -> Callable:
    def pred(parts) -> bool:
        for i, p in enumerate(parts):
            if p % 2 == 1:
                for j, q in enumerate(parts):
                    if j != i and p <= q <= p + 2 * k - 2:
                        return False
        return True

    return pred


def fam9_product(k: int) -> ProductSpec:
    m = 4 * k
    residues = [r for r in range(0, m, 2) if r != 2]
    residues += [1, 2 * k + 1]
    return ProductSpec.from_residues(m, residues)


def and1_sum_pred(k: int) -> Callable:
    small = set(range(1, 2 * k - 2, 2))

    def pred(parts) -> bool:
        if parts and parts[-1] in small:
            return False
        for i, p in enumerate(parts):
            if p % 2 == 1:
                for j, q in enumerate(parts):
                    if j != i and p - 2 * k + 2 <= q <= p:
                        return False
        return True

    return pred


def and1_product(k: int) -> ProductSpec:
    m = 4 * k
    residues = [r for r in range(0, m, 2) if r != m - 2]
    residues += [2 * k - 1, 4 * k - 1]
    return ProductSpec.from_residues(m, residues)


def cor_sum_pred(k: int, i: int) -> Callable:
    def pred(parts) -> bool:
        for a, p in enumerate(parts):
            if p % 2 == 1:
                if p < 2 * i + 1:
                    return False
                for b, q in enumerate(parts):
                    if b == a:
                        continue
                    if q % 2 == 0 and p + 1 - 2 * i <= q <= p + 2 * k - 2 * i - 3:
                        return False
                    if q % 2 == 1 and p <= q <= p + 2 * k - 2:
                        return False
        return True

    return pred


def cor_product(k: int, i: int) -> ProductSpec:
    m = 4 * k
    residues = [r for r in range(0, m, 2) if r != (4 * i + 2) % m]
    residues += [2 * i + 1, (2 * k + 2 * i + 1) % m]
    return ProductSpec.from_residues(m, residues)


# ------------------------------------------------------------- classical

def rr_sum_pred(min_part: int) -> Callable:
    def pred(parts) -> bool:
        if parts and parts[-1] < min_part:
            return False
        return all(a - b >= 2 for a, b in _adjacent(parts))
    return pred


def macmahon_sum_pred(parts) -> bool:
    if parts and parts[-1] == 1:
        return False
    return all(a - b != 1 for a, b in _adjacent(parts))


def macmahon_conj_pred(parts) -> bool:
    return all(f != 1 for f, _g in frequency_profile(parts).values())


def andrews236_sum_pred(parts) -> bool:
    if parts and parts[-1] == 1:
        return False
    if any(a - b == 1 for a, b in _adjacent(parts)):
        return False
    return all(f <= 2 for f, _g in frequency_profile(parts).values())


def schur_sum_pred(parts) -> bool:
    for a, b in _adjacent(parts):
        if a - b < 3:
            return False
        if a - b == 3 and a % 3 == 0 and b % 3 == 0:
            return False
    return True


def gg_sum_pred(parts) -> bool:
    for a, b in _adjacent(parts):
        if a - b < 2:
            return False
        if a - b == 2 and a % 2 == 0:
            return False
    return True


def capparelli_sum_pred(parts) -> bool:
    if parts and parts[-1] < 2:
        return False
    for a, b in _adjacent(parts):
        if a - b < 2:
            return False
        if a - b in (2, 3) and (a + b) % 3 != 0:
            return False
    return True


def gordon_sum_pred(k: int, i: int) -> Callable:
    def pred(parts) -> bool:
        if sum(1 for p in parts if p == 1) > i - 1:
            return False
        for j in range(len(parts) - k + 1):
            if parts[j] - parts[j + k - 1] < 2:
                return False
        return True

    return pred


def bressoud_sum_pred(k: int, i: int) -> Callable:
    base = gordon_sum_pred(k, i)

    def pred(parts) -> bool:
        if not base(parts):
            return False
        for j in range(len(parts) - k + 2):
            win = parts[j:j + k - 1]
            if win and win[0] - win[-1] <= 1 and sum(win) % 2 != (i - 1) % 2:
                return False
        return True

    return pred


def mod9_sum_pred(min_part: int) -> Callable:
    def pred(parts) -> bool:
        if parts and parts[-1] < min_part:
            return False
        for a, b in _adjacent(parts):
            if a - b <= 1 and (a + b) % 3 != 0:
                return False
        for j in range(len(parts) - 2):
            if parts[j] - parts[j + 2] < 3:
                return False
        return True

    return pred


_MOD9_FLAT_RULES = [(1, 2, 1, 3), (1, 2, 2, 3), (1, 3, 0, 1), (2, 3, 0, 1)]


# ------------------------------------------------------------- the registry

_REGISTRY: dict = {}
_ALIASES = {"NOT3MOD4": "FAM3_K1"}


def _register(ident: RegisteredIdentity):
    if ident.name in _REGISTRY:
        raise ValueError("duplicate identity name %r" % ident.name)
    _REGISTRY[ident.name] = ident


def _build_registry():
    # Family 1, three variants, k up to 3 (k=1 collapses onto MacMahon)
    for variant in (1, 2, 3):
        for k in (1, 2, 3):
            _register(RegisteredIdentity(
                name="FAM1_%d_K%d" % (variant, k),
                summary="Family 1.%d with modulus %d" % (variant, 3 * k + 3),
                product=fam1_product(variant, k),
                sum_pred=fam1_sum_pred(variant, k),
                flat=fam1_flat(variant, k),
                conj_pred=fam1_conj_pred(variant, k),
                family="FAM1_%d" % variant,
                params=(("k", k),),
            ))

    fam_builders = {
        2: (fam2_sum_pred, fam2_conj_pred, fam2_flat,
            lambda k: _evens_plus(2 * k + 2, [2 * k + 1])),
        3: (fam3_sum_pred, fam3_conj_pred, fam3_flat,
            lambda k: _evens_plus(2 * k + 2, [1])),
        4: (fam4_sum_pred, fam4_conj_pred, fam4_flat,
            lambda k: _evens_plus(2 * k + 6, [3])),
        5: (fam5_sum_pred, fam5_conj_pred, fam5_flat,
            lambda k: _evens_plus(2 * k + 6, [2 * k + 3])),
        6: (fam6_sum_pred, fam6_conj_pred, fam6_flat,
            lambda k: _evens_plus(4 * k + 8, [2 * k + 5])),
        7: (fam7_sum_pred, fam7_conj_pred, fam7_flat,
            lambda k: _evens_plus(4 * k + 8, [2 * k + 3])),
    }
    for fam, (spred, cpred, flat, prod) in fam_builders.items():
        for k in (1, 2):
            _register(RegisteredIdentity(
                name="FAM%d_K%d" % (fam, k),
                summary="Family %d with k=%d" % (fam, k),
                product=prod(k),
                sum_pred=spred(k),
                flat=flat(k),
                conj_pred=cpred(k),
                family="FAM%d" % fam,
                params=(("k", k),),
            ))

    # Family 8: the mod-5 base family and the multi-class sets.  Zero
    # counts below are the ones that make each identity true; see the
    # refuted catalog for class pairs whose window form overcounts.
    for j in range(1, 6):
        _register(_fam8_entry("FAM8_MOD5_J%d" % j, (j,), 5, 3, 2))
    mod9 = [((0, 3), 0), ((0, 4), 0), ((0, 5), 0), ((0, 6), 0),
            ((1, 6), 2), ((2, 6), 1), ((3, 6), 0), ((3, 7), 0), ((3, 8), 0)]
    for s, zeros in mod9:
        _register(_fam8_entry("FAM8_MOD9_S%d%d" % s, s, 9, 3, zeros))
    for s in [(0, 5), (3, 8), (4, 9)]:
        _register(_fam8_entry("FAM8_MOD10_S%d%d" % s, s, 10, 3, 0))
    mod11_z0 = [(0, 5), (0, 6), (3, 8), (3, 9), (4, 9), (4, 10), (5, 10)]
    mod11_z1 = [(2, 7), (2, 8)]
    mod11_z2 = [(1, 6), (1, 7)]
    for zeros, sets in ((0, mod11_z0), (1, mod11_z1), (2, mod11_z2)):
        for s in sets:
            _register(_fam8_entry(_mod11_name(s, zeros), s, 11, 3, zeros))
    _register(_fam8_entry("FAM8_MOD23", (0, 9, 16), 23, 3, 0))
    _register(_fam8_entry("FAM8_MOD17_D3", (0, 7), 17, 4, 0))

    # Class pairs in the same style whose sum side strictly overcounts
    # the product from some n on, for every fictitious zero count.  Each
    # carries the first overcount location for regression pinning.
    _refute((3, 9), 10, 35)
    _refute((5, 9), 10, 45)
    _refute((0, 4), 11, 40)
    _refute((3, 7), 11, 45)
    _refute((6, 10), 11, 50)
    _refute((2, 9), 11, 55, zeros=1)

    # Family 9, its Andrews-style companion, and the interpolating corollary
    for k in (2, 3):
        _register(RegisteredIdentity(
            name="FAM9_K%d" % k,
            summary="Odd parts isolated above, modulus %d" % (4 * k),
            product=fam9_product(k),
            sum_pred=fam9_sum_pred(k),
            flat=None,
            family="FAM9", params=(("k", k),),
        ))
        _register(RegisteredIdentity(
            name="AND1_K%d" % k,
            summary="Odd parts isolated below, modulus %d" % (4 * k),
            product=and1_product(k),
            sum_pred=and1_sum_pred(k),
            flat=None,
            family="AND1", params=(("k", k),),
        ))
        for i in range(k):
            _register(RegisteredIdentity(
                name="COR_K%d_I%d" % (k, i),
                summary="Interpolated odd-isolation identity (k=%d, i=%d)" % (k, i),
                product=cor_product(k, i),
                sum_pred=cor_sum_pred(k, i),
                flat=None,
                family="COR", params=(("k", k), ("i", i)),
            ))

    # classical regressions
    _register(RegisteredIdentity(
        name="RR1", summary="Difference at least 2",
        product=ProductSpec.from_residues(5, [1, 4]),
        sum_pred=rr_sum_pred(1),
        flat=condition_set([(1, 2, 0, 1)]),
        family="RR", params=(("i", 1),)))
    _register(RegisteredIdentity(
        name="RR2", summary="Difference at least 2, parts at least 2",
        product=ProductSpec.from_residues(5, [2, 3]),
        sum_pred=rr_sum_pred(2),
        flat=condition_set([(1, 2, 0, 1)], zeros=1),
        family="RR", params=(("i", 2),)))
    _register(RegisteredIdentity(
        name="MACMAHON", summary="No consecutive integers, no ones",
        product=ProductSpec.from_residues(6, [0, 2, 3, 4]),
        sum_pred=macmahon_sum_pred,
        flat=condition_set([(1, 2, 1, 2)], zeros=1),
        conj_pred=macmahon_conj_pred,
        family="MACMAHON"))
    _register(RegisteredIdentity(
        name="ANDREWS_236",
        summary="No consecutive integers, no ones, no part three times",
        product=ProductSpec.from_residues(6, [2, 3, 4]),
        sum_pred=andrews236_sum_pred,
        flat=condition_set([(1, 2, 1, 2), (1, 3, 0, 3)], zeros=1),
        family="ANDREWS_236"))
    _register(RegisteredIdentity(
        name="SCHUR",
        summary="Difference at least 3, no adjacent multiples of 3",
        product=ProductSpec.from_residues(6, [1, 5]),
        sum_pred=schur_sum_pred,
        flat=condition_set([(1, 2, 0, 1), (2, 2, 0, 6), (2, 2, 2, 6),
                            (2, 2, 3, 6), (2, 2, 4, 6)]),
        family="SCHUR"))
    _register(RegisteredIdentity(
        name="GG",
        summary="Difference at least 2, no adjacent evens two apart",
        product=ProductSpec.from_residues(8, [1, 4, 7]),
        sum_pred=gg_sum_pred,
        flat=condition_set([(1, 2, 0, 1), (2, 2, 2, 4)]),
        family="GG"))
    _register(RegisteredIdentity(
        name="CAPPARELLI1",
        summary="Gap 2, gaps of 2 or 3 need sums divisible by 3, no ones",
        product=ProductSpec.from_residues(12, [2, 3, 9, 10]),
        sum_pred=capparelli_sum_pred,
        flat=None,
        dp_rules=condition_set([(1, 2, 0, 1), (2, 2, 1, 3), (2, 2, 2, 3)]),
        dp_min_part=2,
        family="CAPPARELLI"))
    for k in (2, 3, 4):
        for i in range(1, k + 1):
            m = 2 * k + 1
            _register(RegisteredIdentity(
                name="GORDON_K%d_I%d" % (k, i),
                summary="Gordon-style gap condition at distance %d" % (k - 1),
                product=ProductSpec.from_residues(
                    m, [r for r in range(m) if r % m not in (0, i % m, (m - i) % m)]),
                sum_pred=gordon_sum_pred(k, i),
                flat=condition_set([(1, k, 0, 1)], zeros=k - i),
                family="GORDON", params=(("k", k), ("i", i)),
            ))
        for i in range(1, k):
            m = 2 * k
            _register(RegisteredIdentity(
                name="BRESSOUD_K%d_I%d" % (k, i),
                summary="Even-modulus gap condition with a parity constraint",
                product=ProductSpec.from_residues(
                    m, [r for r in range(m) if r not in (0, i % m, (m - i) % m)]),
                sum_pred=bressoud_sum_pred(k, i),
                flat=condition_set([(1, k, 0, 1), (1, k - 1, i % 2, 2)],
                                   zeros=k - i),
                family="BRESSOUD", params=(("k", k), ("i", i)),
            ))
    mod9_products = {1: (1, 3, 6, 8), 2: (2, 3, 6, 7), 3: (3, 4, 5, 6)}
    for idx in (1, 2, 3):
        _register(RegisteredIdentity(
            name="MOD9_I%d" % idx,
            summary="Distance-2 gap of 3 with a mod-3 pair condition",
            product=ProductSpec.from_residues(9, mod9_products[idx]),
            sum_pred=mod9_sum_pred(idx),
            flat=condition_set(_MOD9_FLAT_RULES, zeros=idx - 1),
            family="MOD9", params=(("i", idx),)))


def _fam8_entry(name, residues, modulus, width, zeros) -> RegisteredIdentity:
    return RegisteredIdentity(
        name=name,
        summary="Flat %d-windows avoid sums in %r mod %d"
                % (width, tuple(residues), modulus),
        product=fam8_product(residues, modulus),
        sum_pred=fam8_sum_pred(residues, modulus, width, zeros),
        flat=fam8_flat(residues, modulus, width, zeros),
        family="FAM8",
        params=(("residues", tuple(residues)), ("modulus", modulus),
                ("width", width), ("zeros", zeros)),
    )


def _mod11_name(s, zeros) -> str:
    tag = "_".join(str(x) for x in s) if max(s) > 9 else "%d%d" % tuple(s)
    if zeros == 0:
        return "FAM8_MOD11_S%s" % tag
    return "FAM8_MOD11_Z%d_S%s" % (zeros, tag)


@dataclass(frozen=True)
class RefutedConjecture:
    """A window/product class pair that fails: the sum side first exceeds
    the product coefficient at `counterexample_n` (with the stated zeros,
    and no other zero count rescues it)."""
    name: str
    residues: tuple
    modulus: int
    zeros: int
    counterexample_n: int

    def flat(self) -> ConditionSet:
        return fam8_flat(self.residues, self.modulus, 3, self.zeros)

    def product(self) -> ProductSpec:
        return fam8_product(self.residues, self.modulus)


_REFUTED: dict = {}


def _refute(residues, modulus, counterexample_n, zeros=0):
    if modulus == 11:
        name = _mod11_name(residues, zeros)
    else:
        name = "FAM8_MOD%d_S%d%d" % ((modulus,) + tuple(residues))
    _REFUTED[name] = RefutedConjecture(
        name, tuple(residues), modulus, zeros, counterexample_n)


_build_registry()


def refuted_names() -> list:
    return sorted(_REFUTED)


def get_refuted(name: str) -> RefutedConjecture:
    key = name.strip().upper()
    try:
        return _REFUTED[key]
    except KeyError:
        raise UnknownFamily("no refuted conjecture recorded under %r" % name) from None


def registered_names() -> list:
    return sorted(_REGISTRY)


def get_identity(name: str) -> RegisteredIdentity:
    key = name.strip().upper()
    key = _ALIASES.get(key, key)
    try:
        return _REGISTRY[key]
    except KeyError:
        raise UnknownFamily("no identity registered under %r" % name) from None


def family_satisfies(name: str, parts, form: str = SUM) -> bool:
    """Membership test for one side of a registered identity."""
    ident = get_identity(name)
    if hasattr(parts, "parts"):
        parts = parts.parts
    parts = tuple(parts)
    if form == SUM:
        return bool(ident.sum_pred(parts))
    if form == CONJUGATE:
        if ident.conj_pred is None:
            raise UnknownFamily("%s states no conjugate form" % ident.name)
        return bool(ident.conj_pred(parts))
    if form == PRODUCT:
        return all(ident.product.allows_part(p) for p in parts)
    raise ValueError("form must be sum, conjugate, or product")


def flat_form_of(name: str) -> ConditionSet:
    ident = get_identity(name)
    if ident.flat is None:
        raise NoFlatForm("%s has no exact window encoding" % ident.name)
    return ident.flat
