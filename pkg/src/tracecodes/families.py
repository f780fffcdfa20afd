"""Catalog of permutation monomials/trinomials over GF(2^m) used to drive the
trace sequences, with validity ranges and exhaustive permutation checks.

Exponents are plain Python ints computed per ``m``; before evaluation they are
reduced modulo ``v = 2^m - 1`` into ``[1, v]`` so that a multiple of ``v``
becomes ``x^v`` (1 on nonzero ``x``, 0 at ``x = 0``) rather than ``x^0``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, UsageError
from .gf2m import DEFAULT_ALPHA_MINPOLY, FieldElement, FieldSpec, get_field


class ExtrapolationWarning(UserWarning):
    """A family is being used at an m outside its proven range."""


@dataclass(frozen=True)
class FamilyDescriptor:
    id: str
    formula: str
    exponents_fn: Callable[[int], list[int]] = field(repr=False, compare=False)
    validity_fn: Callable[[int], bool] = field(repr=False, compare=False)
    validity_text: str = ""
    # m values outside validity that worked examples still use
    extrapolated: frozenset = frozenset()
    permutation_fn: Callable[[int], bool | None] | None = field(default=None, repr=False,
                                                                compare=False)
    permutation_text: str = "unknown"
    params: tuple = ()

    def exponents(self, m: int) -> list[int]:
        return self.exponents_fn(m)

    def is_valid(self, m: int) -> bool:
        return bool(self.validity_fn(m))

    def allows(self, m: int) -> bool:
        """Valid, or explicitly allowed as an extrapolated worked example."""
        return self.is_valid(m) or m in self.extrapolated

    def permutation_claim(self, m: int) -> bool | None:
        """Claimed permutation status at ``m``; None when no claim is made."""
        if self.permutation_fn is None:
            return None
        return self.permutation_fn(m)

    def describe(self) -> dict:
        return {
            "id": self.id,
            "formula": self.formula,
            "validity": self.validity_text,
            "extrapolated_m": sorted(self.extrapolated),
            "permutation": self.permutation_text,
        }


def exp3(i: int) -> int:
    """Exponent of 3 in the factorization of ``i``."""
    if i <= 0:
        raise DomainError(f"exp3 needs a positive integer, got {i}")
    e = 0
    while i % 3 == 0:
        i //= 3
        e += 1
    return e


def _odd(lo):
    return lambda m: m % 2 == 1 and m >= lo


def _even(lo):
    return lambda m: m % 2 == 0 and m >= lo


def _always(m):
    return True


def _template_exponents(s: int, t: int):
    def exps(m):
        q = (1 << (m // 2)) - 1
        return [1, s * q + 1, t * q + 1]
    return exps


def _template_permutation(s: int, t: int):
    """Known permutation criteria for the (s, t) template, else None."""
    def claim(m):
        h = m // 2
        if (s, t) == (1, 1 << (h - 1)):
            return m % 6 != 0
        if t == -s:
            if m % 4 == 0:
                return True
            return exp3(abs(s)) >= exp3((1 << h) + 1)
        return None
    return claim


def trinomial_template(s: int, t: int, fid: str | None = None) -> FamilyDescriptor:
    """``x + x^(s(2^(m/2)-1)+1) + x^(t(2^(m/2)-1)+1)`` for even ``m``."""
    return FamilyDescriptor(
        id=fid or f"F0({s},{t})",
        formula=f"x + x^({s}(2^(m/2)-1)+1) + x^({t}(2^(m/2)-1)+1)",
        exponents_fn=_template_exponents(s, t),
        validity_fn=_even(2),
        validity_text="m even >= 2",
        permutation_fn=_template_permutation(s, t),
        permutation_text="t = -s: iff m = 0 mod 4 or exp3(s) >= exp3(2^(m/2)+1); "
                         "(1, 2^(m/2-1)): iff m != 0 mod 6; otherwise unknown",
        params=(s, t),
    )


def _f8_exponents(m):
    h = m // 2
    return _template_exponents(1, 1 << (h - 1))(m)


def _build_catalog() -> dict[str, FamilyDescriptor]:
    cat = {}

    def add(fd):
        cat[fd.id] = fd

    add(FamilyDescriptor(
        "F1_intro", "x + x^(2^((m+2)/2)-1) + x^(2^m-2^(m/2)+1)",
        lambda m: [1, (1 << (m // 2 + 1)) - 1, (1 << m) - (1 << (m // 2)) + 1],
        _even(2), "m even >= 2", permutation_fn=_always, permutation_text="always"))
    add(FamilyDescriptor(
        "f1", "x + x^(2^((m+1)/2)-1) + x^(2^m-2^((m+1)/2)+1)",
        lambda m: [1, (1 << ((m + 1) // 2)) - 1, (1 << m) - (1 << ((m + 1) // 2)) + 1],
        _odd(3), "m odd >= 3", permutation_fn=_always, permutation_text="always"))
    add(FamilyDescriptor(
        "f2", "x^(3*2^((m+1)/2)+4) + x^(2^((m+1)/2)+2) + x^(2^((m+1)/2))",
        lambda m: [3 * (1 << ((m + 1) // 2)) + 4, (1 << ((m + 1) // 2)) + 2,
                   1 << ((m + 1) // 2)],
        _odd(7), "m odd >= 7", extrapolated=frozenset({5}),
        permutation_fn=_always, permutation_text="always"))
    add(FamilyDescriptor(
        "f3", "x + x^3 + x^(2^((m+1)/2)+1)",
        lambda m: [1, 3, (1 << ((m + 1) // 2)) + 1],
        _odd(5), "m odd >= 5", permutation_fn=_always, permutation_text="always"))
    add(FamilyDescriptor(
        "f4", "x + x^3 + x^(2^m-2^((m+3)/2)+2)",
        lambda m: [1, 3, (1 << m) - (1 << ((m + 3) // 2)) + 2],
        _odd(5), "m odd >= 5", permutation_fn=_always, permutation_text="always"))
    add(FamilyDescriptor(
        "f5", "x^(2^(2h)-2^h+1), h=(m-1)/2",
        lambda m: [(1 << (m - 1)) - (1 << ((m - 1) // 2)) + 1],
        _odd(7), "m odd >= 7", extrapolated=frozenset({5}),
        permutation_fn=_always, permutation_text="always"))
    f6 = trinomial_template(1, -1, "f6")
    add(FamilyDescriptor(
        "f6", "x + x^(2^(m/2)) + x^(2^m-2^(m/2)+1)", f6.exponents_fn,
        _even(4), "m even >= 4", permutation_fn=f6.permutation_fn,
        permutation_text="iff m = 0 mod 4", params=(1, -1)))
    f7 = trinomial_template(2, -2, "f7")
    add(FamilyDescriptor(
        "f7", "x + x^(2^(m/2+1)-1) + x^(2^m-2^(m/2+1)+2)", f7.exponents_fn,
        _even(6), "m even >= 6", extrapolated=frozenset({4}),
        permutation_fn=f7.permutation_fn, permutation_text="iff m = 0 mod 4",
        params=(2, -2)))
    add(FamilyDescriptor(
        "f8", "x + x^(2^(m/2)) + x^(2^(m-1)-2^(m/2-1)+1)", _f8_exponents,
        _even(6), "m even >= 6",
        permutation_fn=lambda m: m % 6 != 0, permutation_text="iff m != 0 mod 6",
        params=(1, "2^(m/2-1)")))
    return cat


CATALOG = _build_catalog()
FAMILY_IDS = ("F1_intro", "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8")


def get_family(fid, s: int | None = None, t: int | None = None) -> FamilyDescriptor:
    """Look up a catalog family; ``F0`` needs the template parameters."""
    if isinstance(fid, FamilyDescriptor):
        return fid
    if fid == "F0":
        if s is None or t is None:
            raise UsageError("F0 needs template parameters s and t")
        return trinomial_template(s, t)
    try:
        return CATALOG[fid]
    except KeyError:
        raise UsageError(f"unknown family {fid!r}; choose from {', '.join(FAMILY_IDS)} "
                         "or F0") from None


def check_m(fam: FamilyDescriptor, m: int) -> bool:
    """Raise on an m the family cannot be built at; return True if extrapolated."""
    if fam.is_valid(m):
        return False
    if m in fam.extrapolated:
        warnings.warn(f"{fam.id} at m={m} lies outside its proven range "
                      f"({fam.validity_text}); treated as an extrapolated example",
                      ExtrapolationWarning, stacklevel=3)
        return True
    raise UsageError(f"{fam.id} requires {fam.validity_text}, got m={m}")


def reduced_exponents(fam: FamilyDescriptor, m: int) -> list[int]:
    """Exponents reduced into [1, v]; a multiple of v maps to v, never 0."""
    v = (1 << m) - 1
    out = []
    for e in fam.exponents(m):
        r = e % v
        out.append(r if r else v)
    return out


def evaluate(fam, m: int, x, spec: FieldSpec | None = None):
    """F(x) for one element; ``x`` may be a FieldElement or a plain int."""
    fam = get_family(fam)
    if spec is None:
        spec = x.spec if isinstance(x, FieldElement) else get_field(m)
    if spec.m != m:
        raise UsageError(f"field has m={spec.m}, family evaluated at m={m}")
    val = x.value if isinstance(x, FieldElement) else int(x)
    if not 0 <= val < spec.size:
        raise UsageError(f"{val} is not an element of GF(2^{m})")
    acc = 0
    for e in reduced_exponents(fam, m):
        acc ^= spec.pow(val, e)
    return FieldElement(acc, spec) if isinstance(x, FieldElement) else acc


def evaluate_all(fam, m: int, xs: np.ndarray | None = None,
                 spec: FieldSpec | None = None) -> np.ndarray:
    """Vectorized F over ``xs`` (default: every field element, in order)."""
    fam = get_family(fam)
    spec = spec or get_field(m)
    if xs is None:
        xs = np.arange(spec.size, dtype=np.int64)
    xs = np.asarray(xs, dtype=np.int64)
    logs = spec.log[xs]
    nz = xs != 0
    out = np.zeros(xs.shape, dtype=np.int64)
    for e in reduced_exponents(fam, m):
        term = spec.exp[(logs * e) % spec.v]
        out ^= np.where(nz, term, 0)
    return out


def is_permutation(fam, m: int, spec: FieldSpec | None = None) -> bool:
    """Exhaustive image count over GF(2^m)."""
    fam = get_family(fam)
    img = evaluate_all(fam, m, spec=spec)
    return int(np.unique(img).size) == 1 << m


# The worked examples name a different reduction polynomial at m = 7 for
# these families.  It is used as the field representation; alpha stays the
# default primitive element, so the sequences do not depend on it.
FIELD_OVERRIDES = {
    ("f4", 7): "x^7+x^3+1",
    ("f5", 7): "x^7+x^3+1",
}


def default_field(fam, m: int, poly=None, alpha=None, config=None) -> FieldSpec:
    """Field a family is built over unless the caller overrides it."""
    fid = get_family(fam).id
    if poly is None and alpha is None and not (config and m in config):
        override = FIELD_OVERRIDES.get((fid, m))
        if override is not None:
            return get_field(m, override, alpha_minpoly=DEFAULT_ALPHA_MINPOLY.get(m))
    return get_field(m, poly, alpha, config)
