"""Writes crates/core/src/small_primes/families.rs: every one-parameter
family both as printed (constant times a product of powers) and expanded."""
from pathlib import Path
from sympy import symbols, expand, Poly

t = symbols("t")

# (label, ell, adic, numerator factored, denominator factored)
# a factored form is (constant, [(coefficients low degree first, exponent)])
FAMILIES = [
    ("mod2-a", 2, False, (256, [([1, 1], 3)]), (1, [([0, 1], 1)])),
    ("mod2-b", 2, False, (1, [([1728, 0, 1], 1)]), (1, [])),
    ("mod3-a", 3, False, (27, [([1, 1], 1), ([9, 1], 3)]), (1, [([0, 1], 3)])),
    ("mod3-b", 3, False, (1, [([0, 1], 3)]), (1, [])),
    ("mod5-a", 5, False, (125, [([1, 1], 1), ([1, 2], 3), ([3, -3, 2], 3)]), (1, [([-1, 1, 1], 5)])),
    ("mod5-b", 5, False, (25, [([5, 10, 1], 3)]), (1, [([0, 1], 5)])),
    ("mod5-c", 5, False, (1, [([0, 1], 3), ([40, 5, 1], 1)]), (1, [])),
    ("mod7-a", 7, False,
     (1, [([0, 1], 1), ([1, 1], 3), ([1, -5, 1], 3), ([8, -5, 1], 3), ([7, -7, 8, -5, 1], 3)]),
     (1, [([1, 3, -4, 1], 7)])),
    ("mod7-b", 7, False,
     (64, [([0, 1], 3), ([7, 0, 1], 3), ([14, -7, 1], 3), ([-7, -14, 5], 3)]),
     (1, [([7, 7, -7, 1], 7)])),
    ("mod7-c", 7, False, (1, [([2401, 245, 1], 3), ([49, 13, 1], 1)]), (1, [([0, 1], 7)])),
    ("mod13", 13, False, (1, [([13, 5, 1], 1), ([1, 19, 20, 7, 1], 3)]), (1, [([0, 1], 1)])),
    ("2adic-a", 2, True, (-4, [([0, 1], 3), ([8, 1], 1)]), (1, [])),
    ("2adic-b", 2, True, (1, [([1728, 0, -1], 1)]), (1, [])),
    ("2adic-c", 2, True, (1, [([1728, 0, 2], 1)]), (1, [])),
    ("2adic-d", 2, True, (1, [([1728, 0, -2], 1)]), (1, [])),
    ("3adic", 3, True,
     (-2187, [([-1, 0, 1], 3), ([16, 12, -3, 1, 6, 3, 1], 3), ([-5, -3, 3, 2], 1)]),
     (1, [([-1, -3, 0, 1], 9)])),
]


def to_sympy(form):
    c, factors = form
    e = c
    for coeffs, k in factors:
        e *= sum(a * t**i for i, a in enumerate(coeffs)) ** k
    return expand(e)


def expanded(form):
    return [int(x) for x in Poly(to_sympy(form), t).all_coeffs()[::-1]]


def rs_list(xs):
    return "&[" + ", ".join(str(x) for x in xs) + "]"


def rs_factored(form):
    c, factors = form
    fs = ", ".join(f"({rs_list(co)}, {k})" for co, k in factors)
    return f"Factored {{ constant: {c}, factors: &[{fs}] }}"


out = [
    "// Generated by scripts/gen_families.py; do not edit by hand.",
    "",
    "use super::family::{FamilyData, Factored};",
    "",
    "pub(super) const FAMILIES: &[FamilyData] = &[",
]
for label, ell, adic, num, den in FAMILIES:
    out += [
        "    FamilyData {",
        f'        label: "{label}",',
        f"        ell: {ell},",
        f"        adic_only: {'true' if adic else 'false'},",
        f"        numerator: {rs_list(expanded(num))},",
        f"        denominator: {rs_list(expanded(den))},",
        f"        numerator_factored: {rs_factored(num)},",
        f"        denominator_factored: {rs_factored(den)},",
        "    },",
    ]
out.append("];")
dest = Path(__file__).resolve().parent.parent / "crates/core/src/small_primes/families.rs"
dest.write_text("\n".join(out) + "\n")
print("wrote", dest)
