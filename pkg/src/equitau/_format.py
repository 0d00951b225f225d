"""Canonical text rendering shared by the ring element types."""

from __future__ import annotations

from fractions import Fraction


def variable_names(stem: str, count: int) -> list[str]:
    """"t" for a single variable, "t1", "t2", ... otherwise."""
    if count == 1:
        return [stem]
    return [f"{stem}{i + 1}" for i in range(count)]


def monomial_string(names, exponents) -> str:
    """Render u1^a1 u2^a2 ... omitting unit exponents and untouched variables."""
    parts = []
    for name, e in zip(names, exponents):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)


def join_signed_terms(terms) -> str:
    """Join (coefficient, monomial) pairs as "2 - u + 1/12 t^4"; empty input is "0"."""
    out = []
    for coeff, mono in terms:
        coeff = Fraction(coeff)
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag} {mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out) if out else "0"
