"""Volume extraction from h-asymptotics, normalization conversions and the
closed formulas for genus 0 and hyperelliptic components."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod

from .exact import HLaurent, PiPoly, double_factorial
from .genfun import connected_laurent
from .strata import StratumSignature, invariants, to_profile, weight

CONVENTIONS = ("eo", "aez", "aez-unnumbered")
METHODS = ("auto", "eo", "closed-form")
DEFAULT_WEIGHT_CAP = 6


class VolumeError(ArithmeticError):
    pass


class PoleMismatch(VolumeError):
    """A pole of order above the dimension survived, or the leading term is not a pi-monomial."""


class ClosedFormUnavailable(ValueError):
    pass


class WeightAboveCap(ValueError):
    pass


def extract_volume(L: HLaurent, dim: int) -> PiPoly:
    """Vol^EO from Z° ~ (Vol/dim_R) dim! / h^dim."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    for k, c in L.terms.items():
        if k < -dim and not c.is_zero():
            raise PoleMismatch(f"pole h^{k} with coefficient {c} survives (dim {dim})")
    lead = L.coefficient(-dim)
    if not lead.is_monomial():
        raise PoleMismatch(f"leading coefficient {lead} is not a single pi-monomial")
    return lead * Fraction(2 * dim, factorial(dim))


def aez_factor(sig: StratumSignature, include_poles: bool = True) -> Fraction:
    """4^dim / 2^{l(mu)} * prod m_i!, m_i over odd orders (poles too by default)."""
    p = to_profile(sig)
    dim = invariants(p).dim
    mults = [m for a, m in sig.multiplicities().items() if a % 2 and (include_poles or a > 0)]
    return Fraction(4 ** dim, 2 ** len(p.mu)) * prod(factorial(m) for m in mults)


def to_aez(vol_eo: PiPoly, sig: StratumSignature, include_poles: bool = True) -> PiPoly:
    return vol_eo * aez_factor(sig, include_poles)


def unnumbered_from_numbered(vol: PiPoly, multiplicities, gamma_order: int = 1) -> PiPoly:
    """Vol^unnumb = |Gamma| / prod m_i! * Vol^numb."""
    if gamma_order < 1:
        raise ValueError("|Gamma| must be positive")
    return vol * Fraction(gamma_order, prod(factorial(m) for m in multiplicities))


def numbered_from_unnumbered(vol: PiPoly, multiplicities, gamma_order: int = 1) -> PiPoly:
    return vol * Fraction(prod(factorial(m) for m in multiplicities), gamma_order)


# -- closed forms -----------------------------------------------------------


def _dfrac(k: int) -> Fraction:
    """k!! / (k+1)!!"""
    return Fraction(double_factorial(k), double_factorial(k + 1))


def _v(n: int) -> PiPoly:
    if n < -1:
        raise ValueError(f"order {n} not allowed")
    if n % 2:
        return PiPoly.monomial(_dfrac(n), n + 1)
    return PiPoly.monomial(2 * _dfrac(n), n)


def genus0_volume(sig: StratumSignature) -> PiPoly:
    if sig.genus != 0:
        raise ClosedFormUnavailable(f"{sig} has genus {sig.genus}, not 0")
    out = PiPoly.monomial(2, 2)
    for a in sig.orders:
        out = out * _v(a)
    return out


HYP_TYPES = ("1", "1'", "2", "3")


def _odd_ge_minus1(k):
    return k >= -1 and k % 2 == 1


def _even_ge0(k):
    return k >= 0 and k % 2 == 0


def hyperelliptic_volume(kind: str, k1: int, k2: int) -> PiPoly:
    """Volume of the hyperelliptic component attached to (k1, k2), numbered convention."""
    d = k1 + k2 + 4
    if kind in ("1", "1'"):
        if not (_odd_ge_minus1(k1) and _odd_ge_minus1(k2)) or (k1, k2) == (-1, -1):
            raise ValueError(f"type 1 needs odd k1, k2 >= -1, not both -1; got ({k1}, {k2})")
        if (kind == "1'") != (k1 == k2):
            raise ValueError("type 1' is exactly the case k1 == k2")
        c = Fraction(2 ** d, factorial(d)) * _dfrac(k1) * _dfrac(k2)
        return PiPoly.monomial(3 * c if k1 == k2 else c, d)
    if kind == "2":
        if not (_odd_ge_minus1(k1) and _even_ge0(k2)):
            raise ValueError(f"type 2 needs odd k1 >= -1 and even k2 >= 0; got ({k1}, {k2})")
        return PiPoly.monomial(Fraction(2 ** d, factorial(d)) * _dfrac(k1) * _dfrac(k2), d - 1)
    if kind == "3":
        if not (_even_ge0(k1) and _even_ge0(k2)):
            raise ValueError(f"type 3 needs even k1, k2 >= 0; got ({k1}, {k2})")
        return PiPoly.monomial(Fraction(2 ** (d + 1), factorial(d)) * _dfrac(k1) * _dfrac(k2), d - 2)
    raise ValueError(f"unknown hyperelliptic type {kind!r}")


def hyperelliptic_signature(kind: str, k1: int, k2: int) -> StratumSignature:
    if kind in ("1", "1'"):
        return StratumSignature((k1, k1, k2, k2))
    if kind == "2":
        return StratumSignature((k1, k1, 2 * k2 + 2))
    if kind == "3":
        return StratumSignature((2 * k1 + 2, 2 * k2 + 2))
    raise ValueError(f"unknown hyperelliptic type {kind!r}")


def hyperelliptic_parameters(sig: StratumSignature):
    """(type, k1, k2) if ``sig`` carries a hyperelliptic component, else None."""
    o = sig.orders
    if len(o) == 4 and o[0] == o[1] and o[2] == o[3] and all(_odd_ge_minus1(k) for k in o):
        if (o[0], o[2]) != (-1, -1):
            return ("1'" if o[0] == o[2] else "1", o[0], o[2])
    if len(o) == 3:
        evens = [a for a in o if a % 2 == 0]
        odds = [a for a in o if a % 2]
        if len(evens) == 1 and len(odds) == 2 and odds[0] == odds[1] and (evens[0] - 2) % 4 == 0:
            return ("2", odds[0], (evens[0] - 2) // 2)
    if len(o) == 2 and all(a % 4 == 2 and a >= 2 for a in o):
        return ("3", (o[0] - 2) // 2, (o[1] - 2) // 2)
    return None


# strata that are connected and consist of one hyperelliptic component
CONNECTED_HYPERELLIPTIC = {(1, 1, -1, -1), (2, -1, -1), (1, 1, 1, 1), (2, 1, 1), (2, 2)}


def hyperelliptic_abelian_volume(kind: str, k: int) -> PiPoly:
    """Area-1/2 volume of H^hyp(k-1) (kind "1", k odd) or H^hyp((k/2-1)^2) (kind "2", k even)."""
    if kind == "1":
        if k < 3 or k % 2 == 0:
            raise ValueError("type 1 needs odd k >= 3")
        return PiPoly.monomial(Fraction(2 ** (k + 2), factorial(k + 2)) * _dfrac(k - 2), k + 1)
    if kind == "2":
        if k < 4 or k % 2:
            raise ValueError("type 2 needs even k >= 4")
        return PiPoly.monomial(Fraction(2 ** (k + 3), factorial(k + 2)) * _dfrac(k - 2), k)
    raise ValueError(f"unknown abelian hyperelliptic type {kind!r}")


def abelian_hyperelliptic_dim(kind: str, k: int) -> int:
    # H(2g-2) has k = 2g-1 and dimension 2g; H(g-1, g-1) has k = 2g and dimension 2g+1
    return k + 1


def area_half_to_one(vol: PiPoly, dim: int) -> PiPoly:
    return vol / Fraction(2 ** dim)


def area_one_to_half(vol: PiPoly, dim: int) -> PiPoly:
    return vol * Fraction(2 ** dim)


# -- dispatcher -------------------------------------------------------------


@dataclass
class VolumeResult:
    stratum: StratumSignature
    convention: str
    method: str
    value: PiPoly
    dim: int
    genus: int
    g_eff: int
    weight: int
    cross_checks: dict = field(default_factory=dict)

    @property
    def coefficient(self) -> Fraction:
        return self.value.as_monomial()[0]

    @property
    def pi_power(self) -> int:
        return self.value.as_monomial()[1]

    def to_json(self) -> dict:
        c, e = self.value.as_monomial()
        out = {
            "stratum": self.stratum.display(),
            "convention": self.convention,
            "method": self.method,
            "num": c.numerator,
            "den": c.denominator,
            "pi_power": e,
            "dim": self.dim,
            "genus": self.genus,
            "g_eff": self.g_eff,
            "weight": self.weight,
        }
        if self.cross_checks:
            out["cross_checks"] = self.cross_checks
        return out

    def pretty(self) -> str:
        c, e = self.value.as_monomial()
        return f"{c} · π^{e}"


def eo_volume(
    sig: StratumSignature, variant: str = "frobenius", weight_cap: int = DEFAULT_WEIGHT_CAP, route: str = "characters"
) -> PiPoly:
    p = to_profile(sig)
    w = weight(p)
    if w > weight_cap:
        raise WeightAboveCap(f"{sig} has weight {w} > cap {weight_cap}")
    return extract_volume(connected_laurent(p, variant, route), invariants(p).dim)


def closed_form_volume(sig: StratumSignature) -> tuple[PiPoly, str]:
    """Closed form in the table convention, with a label naming the formula used."""
    if sig.genus == 0:
        return genus0_volume(sig), "genus0"
    if sig.orders in CONNECTED_HYPERELLIPTIC:
        kind, k1, k2 = hyperelliptic_parameters(sig)
        v = hyperelliptic_volume(kind, k1, k2)
        if kind == "3":
            # the table counts modulo the hyperelliptic involution here
            v = v / 2
        return v, f"hyperelliptic-{kind}"
    raise ClosedFormUnavailable(f"no closed form covers the whole stratum {sig}")


def _convert(vol_aez: PiPoly, sig: StratumSignature, convention: str, gamma_order: int) -> PiPoly:
    if convention == "aez":
        return vol_aez
    if convention == "eo":
        return vol_aez / aez_factor(sig)
    if convention == "aez-unnumbered":
        return unnumbered_from_numbered(vol_aez, sig.multiplicities().values(), gamma_order)
    raise ValueError(f"unknown convention {convention!r}")


def compute_volume(
    sig: StratumSignature,
    convention: str = "aez",
    method: str = "auto",
    variant: str = "frobenius",
    weight_cap: int = DEFAULT_WEIGHT_CAP,
    gamma_order: int = 1,
    route: str = "characters",
) -> VolumeResult:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    p = to_profile(sig)
    inv = invariants(p)
    checks: dict = {}
    if method == "closed-form":
        aez, label = closed_form_volume(sig)
        used = label
    else:
        aez = to_aez(eo_volume(sig, variant, weight_cap, route), sig)
        used = "eo"
        if method == "auto":
            try:
                cf, label = closed_form_volume(sig)
            except ClosedFormUnavailable:
                pass
            else:
                checks[label] = {"agrees": cf == aez, "value": str(cf)}
                if cf != aez:
                    raise VolumeError(f"closed form {label} gives {cf}, pipeline gives {aez}")
    value = _convert(aez, sig, convention, gamma_order)
    if not value.is_monomial():
        raise VolumeError(f"volume {value} is not a single pi-monomial")
    c, e = value.as_monomial()
    if e != 2 * inv.g_eff or c <= 0:
        raise VolumeError(f"volume {value} violates rationality (expected positive · π^{2 * inv.g_eff})")
    return VolumeResult(sig, convention, used, value, inv.dim, inv.genus, inv.g_eff, inv.weight, checks)
