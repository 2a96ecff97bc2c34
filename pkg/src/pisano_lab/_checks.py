"""Exhaustive verification sweeps behind the `verify` CLI command.

Each check covers one published property of the mod-10 subsequence
structure at its full (desk-scale) range and reports the first
counterexample it finds. The whole battery is a superset of the test
suite's property checks and finishes in seconds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complete import brute_force_shift, compute_shift, first_zero_index, unit_group
from .core import antipodal_sum, fib_mod, lucas_mod, pisano_period
from .quasi import QuasiClass, verify_quasi
from .render import build_scene, render_frames, render_svg
from .subseq import (
    CIRCLE_POINTS,
    DiagramType,
    SubsequenceSpec,
    dodecagon_tuple,
    is_cyclic_shift,
    pentagon_tuple,
    square_tuple,
    star_polygon,
    subsequence_period,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _ok(name: str, detail: str) -> CheckResult:
    return CheckResult(name=name, passed=True, detail=detail)


def _fail(name: str, counterexample: str) -> CheckResult:
    return CheckResult(name=name, passed=False, detail=counterexample)


def _units_60() -> tuple[int, ...]:
    return unit_group(60).elements


# ---------------------------------------------------------------------------
# core arithmetic


def check_fib_recurrence() -> CheckResult:
    name = "fib-recurrence"
    for m in range(2, 31):
        for n in range(-200, 199):
            if fib_mod(n + 2, m) != (fib_mod(n + 1, m) + fib_mod(n, m)) % m:
                return _fail(name, f"recurrence breaks at n={n}, m={m}")
    return _ok(name, "all n in [-200, 200], m in [2, 30]")


def check_negative_reflection() -> CheckResult:
    name = "negative-index-reflection"
    for m in range(2, 31):
        for n in range(0, 201):
            sign = 1 if n % 2 == 1 else -1
            if fib_mod(-n, m) != (sign * fib_mod(n, m)) % m:
                return _fail(name, f"reflection breaks at n={n}, m={m}")
    return _ok(name, "all n in [0, 200], m in [2, 30]")


def check_parity_law() -> CheckResult:
    name = "even-terms-at-multiples-of-3"
    for n in range(0, 1001):
        if (fib_mod(n, 2) == 0) != (n % 3 == 0):
            return _fail(name, f"parity law breaks at n={n}")
    return _ok(name, "all n in [0, 1000]")


def check_five_law() -> CheckResult:
    name = "fives-at-multiples-of-5"
    for n in range(0, 1001):
        if (fib_mod(n, 5) == 0) != (n % 5 == 0):
            return _fail(name, f"divisibility by 5 breaks at n={n}")
    return _ok(name, "all n in [0, 1000]")


def check_index_addition() -> CheckResult:
    name = "index-addition-identity"
    for a in range(-60, 61):
        for b in range(-60, 61):
            expected = (fib_mod(a - 1, 10) * fib_mod(b, 10) + fib_mod(a, 10) * fib_mod(b + 1, 10)) % 10
            if fib_mod(a + b, 10) != expected:
                return _fail(name, f"addition identity breaks at a={a}, b={b}")
    return _ok(name, "all a, b in [-60, 60]")


def check_fifteen_step_multiplier() -> CheckResult:
    name = "fifteen-step-multiplier"
    for n in range(0, 61):
        for j in range(0, 9):
            if fib_mod(n + 15 * j, 10) != (pow(7, j, 10) * fib_mod(n, 10)) % 10:
                return _fail(name, f"15-step multiplier breaks at n={n}, j={j}")
    return _ok(name, "all n in [0, 60], j in [0, 8]")


def check_antipodal_sums() -> CheckResult:
    name = "antipodal-sums"
    for n in range(0, 60):
        total = antipodal_sum(n)
        expected = 0 if n % 15 == 0 else 10
        if total != expected:
            return _fail(name, f"antipodal sum at n={n} is {total}, expected {expected}")
    return _ok(name, "all n in [0, 59]")


def check_period_contents() -> CheckResult:
    name = "period-contents"
    for m in range(2, 51):
        period = pisano_period(m)
        for j, value in enumerate(period.period):
            if value != fib_mod(j, m):
                return _fail(name, f"period of m={m} disagrees with fib_mod at j={j}")
    return _ok(name, "all m in [2, 50]")


# ---------------------------------------------------------------------------
# subsequence diagrams


def _circle_walk(r: int) -> tuple[int, int]:
    """Walk the 60-point circle in steps of r; return (vertices, step q)."""
    visited = {0}
    p = r % CIRCLE_POINTS
    while p != 0:
        visited.add(p)
        p = (p + r) % CIRCLE_POINTS
    points = sorted(visited)
    n = len(points)
    spacings = {(points[(i + 1) % n] - points[i]) % CIRCLE_POINTS for i in range(n)}
    if len(spacings) != 1:
        raise AssertionError(f"walk for r={r} is not equally spaced")
    return n, r // spacings.pop()


def check_polygon_parameters() -> CheckResult:
    name = "polygon-parameters-vs-walk"
    for r in range(1, 60):
        poly = star_polygon(SubsequenceSpec(k=0, r=r))
        n, q = _circle_walk(r)
        if (poly.n, poly.q) != (n, q):
            return _fail(name, f"r={r}: formula gives ({poly.n}, {poly.q}), walk gives ({n}, {q})")
        if math.gcd(poly.n, poly.q) != 1:
            return _fail(name, f"r={r}: n and q share a factor")
        if n == CIRCLE_POINTS:
            expected_type = DiagramType.TYPE3
        elif q in (1, n - 1):
            expected_type = DiagramType.TYPE1
        else:
            expected_type = DiagramType.TYPE2
        if poly.diagram_type != expected_type:
            return _fail(name, f"r={r}: type {poly.diagram_type.value}, walk says {expected_type.value}")
        if poly.convex != (q == 1):
            return _fail(name, f"r={r}: convex flag disagrees with q")
    return _ok(name, "all r in [1, 59]")


def check_reversed_jumps() -> CheckResult:
    name = "reversed-jump-periods"
    for k in range(60):
        for r in range(1, 60):
            forward = subsequence_period(SubsequenceSpec(k=k, r=r)).terms
            backward = subsequence_period(SubsequenceSpec(k=k, r=60 - r)).terms
            n = len(forward)
            if any(backward[j] != forward[(n - j) % n] for j in range(n)):
                return _fail(name, f"(k={k}, r={r}): reversed jump is not the reversed period")
    return _ok(name, "all 3540 (k, r) pairs")


def check_twenty_vertex_steps() -> CheckResult:
    name = "twenty-vertex-steps"
    expected = {9: 3, 21: 7, 27: 9}
    for r, q in expected.items():
        poly = star_polygon(SubsequenceSpec(k=0, r=r))
        if (poly.n, poly.q) != (20, q):
            return _fail(name, f"r={r}: got ({poly.n}, {poly.q}), expected (20, {q})")
    return _ok(name, "r in {9, 21, 27} give n=20 with q=3, 7, 9")


_SQUARE_CLASSES = {1: (1, 7, 9, 3), 3: (2, 4, 8, 6), 5: (5, 5, 5, 5), 15: (0, 0, 0, 0)}
_SQUARE_POWER_BASES = {1: 7, 3: 2, 5: 5}


def check_square_tuples() -> CheckResult:
    name = "square-tuples"
    for k in range(60):
        values = square_tuple(k)
        g = math.gcd(k, 15)
        if not is_cyclic_shift(values, _SQUARE_CLASSES[g]):
            return _fail(name, f"k={k}: {values} is not a rotation of the gcd={g} class")
        expected_sum = 0 if g == 15 else 20
        if sum(values) != expected_sum:
            return _fail(name, f"k={k}: sum {sum(values)}, expected {expected_sum}")
        if g == 15:
            if any(values):
                return _fail(name, f"k={k}: expected all zeros")
        else:
            # start ranges over a full cycle of the power sequence's periodic
            # tail; bases 2 and 5 are not purely periodic, so 0 alone is not
            # always a valid starting exponent
            base = _SQUARE_POWER_BASES[g]
            if not any(
                all(values[i] == pow(base, start + i, 10) for i in range(4)) for start in range(5)
            ):
                return _fail(name, f"k={k}: {values} does not match powers of {base}")
    return _ok(name, "all k in [0, 59]")


_PENTAGON_CLASSES = {
    0: (0, 4, 8, 2, 6),
    1: (1, 3, 5, 7, 9),
    2: (1, 7, 3, 9, 5),
    3: (8, 6, 4, 2, 0),
    4: (5, 9, 3, 7, 1),
    5: (1, 3, 5, 7, 9),
    6: (6, 2, 8, 4, 0),
    7: (9, 7, 5, 3, 1),
    8: (5, 9, 3, 7, 1),
    9: (0, 2, 4, 6, 8),
    10: (1, 7, 3, 9, 5),
    11: (9, 7, 5, 3, 1),
}


def check_pentagon_tuples() -> CheckResult:
    name = "pentagon-tuples"
    for k in range(60):
        values = pentagon_tuple(k)
        if not is_cyclic_shift(values, _PENTAGON_CLASSES[k % 12]):
            return _fail(name, f"k={k}: {values} is not a rotation of its class")
        expected_sum = 20 if k % 12 in (0, 3, 6, 9) else 25
        if sum(values) != expected_sum:
            return _fail(name, f"k={k}: sum {sum(values)}, expected {expected_sum}")
    return _ok(name, "all k in [0, 59]")


def check_dodecagon_tuples() -> CheckResult:
    name = "dodecagon-tuples"
    lucas = tuple(lucas_mod(n, 10) for n in range(12))
    zero_five = (0, 5, 5) * 4
    for k in range(60):
        values = dodecagon_tuple(k)
        if k % 5 == 0:
            if sum(values) != 40 or not is_cyclic_shift(values, zero_five):
                return _fail(name, f"k={k}: expected a rotation of the 0,5,5 pattern")
        else:
            if sum(values) != 60 or not is_cyclic_shift(values, lucas):
                return _fail(name, f"k={k}: expected a rotation of the Lucas period")
    return _ok(name, "all k in [0, 59]")


# ---------------------------------------------------------------------------
# quasi recurrences


def check_forward_guarantee() -> CheckResult:
    name = "forward-recurrence-guarantee"
    for r in range(1, 60):
        if r % 4 != 1 or r % 3 == 0:
            continue
        for k in range(60):
            observed = verify_quasi(subsequence_period(SubsequenceSpec(k=k, r=r)))
            if observed not in (QuasiClass.FORWARD, QuasiClass.BOTH):
                return _fail(name, f"(k={k}, r={r}): observed {observed.value}")
    return _ok(name, "all k, all r = 1 (mod 4) with 3 not dividing r")


def check_reverse_guarantee() -> CheckResult:
    name = "reverse-recurrence-guarantee"
    for r in range(1, 60):
        if r % 4 != 3 or r % 3 == 0:
            continue
        for k in range(60):
            observed = verify_quasi(subsequence_period(SubsequenceSpec(k=k, r=r)))
            if observed not in (QuasiClass.REVERSE, QuasiClass.BOTH):
                return _fail(name, f"(k={k}, r={r}): observed {observed.value}")
    return _ok(name, "all k, all r = 3 (mod 4) with 3 not dividing r")


def check_forward_seed_identity() -> CheckResult:
    name = "forward-seed-identity"
    for r in range(1, 201):
        if r % 4 == 1 and r % 3 != 0:
            if (1 + fib_mod(1 - r, 10)) % 10 != fib_mod(r + 1, 10):
                return _fail(name, f"identity breaks at r={r}")
    return _ok(name, "all r = 1 (mod 4), 3 not dividing r, up to 200")


def check_reverse_seed_identity() -> CheckResult:
    name = "reverse-seed-identity"
    for r in range(1, 201):
        if r % 4 == 3 and r % 3 != 0:
            if (1 + fib_mod(r + 1, 10)) % 10 != fib_mod(1 - r, 10):
                return _fail(name, f"identity breaks at r={r}")
    return _ok(name, "all r = 3 (mod 4), 3 not dividing r, up to 200")


def check_negative_index_parity() -> CheckResult:
    name = "negative-index-parity"
    for n in range(0, 201):
        expected = (-fib_mod(n, 10)) % 10 if n % 2 == 0 else fib_mod(n, 10)
        if fib_mod(-n, 10) != expected:
            return _fail(name, f"parity rule breaks at n={n}")
    return _ok(name, "all n in [0, 200]")


# ---------------------------------------------------------------------------
# complete subsequences


def check_alignment_agreement() -> CheckResult:
    name = "alignment-oracle-agreement"
    for k in range(60):
        for r in _units_60():
            cert = compute_shift(k, r)
            direction, shift = brute_force_shift(k, r)
            if (cert.direction, cert.shift) != (direction, shift):
                return _fail(
                    name,
                    f"(k={k}, r={r}): computed {cert.direction.value}:{cert.shift}, "
                    f"oracle found {direction.value}:{shift}",
                )
    return _ok(name, "all 960 (k, r) cases")


_UNIT_DIGIT_VALUES = {
    1: 1, 7: 3, 11: 9, 13: 3, 17: 7, 19: 1, 23: 7, 29: 9,
    31: 9, 37: 7, 41: 1, 43: 7, 47: 3, 49: 9, 53: 3, 59: 1,
}


def check_unit_digit_law() -> CheckResult:
    name = "unit-digit-law"
    for r in _units_60():
        value = fib_mod(r, 10)
        if value != _UNIT_DIGIT_VALUES[r]:
            return _fail(name, f"r={r}: F(r) mod 10 is {value}, expected {_UNIT_DIGIT_VALUES[r]}")
        expected = r % 10 if r % 4 == 1 else (-r) % 10
        if value != expected:
            return _fail(name, f"r={r}: F(r) mod 10 is {value}, the sign law expects {expected}")
    return _ok(name, "all 16 units of U(60)")


def check_unit_values_are_units() -> CheckResult:
    name = "unit-values-are-units"
    for r in _units_60():
        if fib_mod(r, 10) not in (1, 3, 7, 9):
            return _fail(name, f"r={r}: F(r) mod 10 is not a unit mod 10")
    return _ok(name, "all 16 units of U(60)")


_INVERSE_ANCHORS = {1: 0, 3: 15, 7: 45, 9: 30}


def check_inverse_anchor_positions() -> CheckResult:
    name = "inverse-anchor-positions"
    for r in _units_60():
        base = _INVERSE_ANCHORS[fib_mod(r, 10)]
        for anchor in (base - 1, base + 1):
            if (fib_mod(anchor, 10) * fib_mod(r, 10)) % 10 != 1:
                return _fail(name, f"r={r}: F({anchor}) is not the inverse of F({r})")
    return _ok(name, "both anchor variants for all 16 units")


def check_four_zeros() -> CheckResult:
    name = "four-equally-spaced-zeros"
    for k in range(60):
        for r in _units_60():
            terms = subsequence_period(SubsequenceSpec(k=k, r=r)).terms
            zeros = [j for j, value in enumerate(terms) if value == 0]
            j0 = first_zero_index(k, r)
            if zeros != [j0, j0 + 15, j0 + 30, j0 + 45]:
                return _fail(name, f"(k={k}, r={r}): zeros at {zeros}")
    return _ok(name, "all 960 periods")


def check_zero_subscripts() -> CheckResult:
    name = "zero-subscript-classes"
    for k in range(60):
        for r in _units_60():
            j0 = first_zero_index(k, r)
            subscripts = {(k + r * (j0 + 15 * i)) % 60 for i in range(4)}
            if subscripts != {0, 15, 30, 45}:
                return _fail(name, f"(k={k}, r={r}): subscripts {sorted(subscripts)}")
    return _ok(name, "all 960 periods")


def check_adjacent_zero_one() -> CheckResult:
    name = "adjacent-zero-one"
    for k in range(60):
        for r in _units_60():
            terms = subsequence_period(SubsequenceSpec(k=k, r=r)).terms
            if not any(terms[j] == 0 and terms[(j + 1) % 60] == 1 for j in range(60)):
                return _fail(name, f"(k={k}, r={r}): no adjacent 0, 1 pair")
    return _ok(name, "all 960 periods")


def check_first_zero_minimality() -> CheckResult:
    name = "first-zero-minimality"
    for k in range(60):
        for r in _units_60():
            terms = subsequence_period(SubsequenceSpec(k=k, r=r)).terms
            scanned = next(j for j, value in enumerate(terms) if value == 0)
            computed = first_zero_index(k, r)
            if computed != scanned:
                return _fail(name, f"(k={k}, r={r}): computed {computed}, scan found {scanned}")
    return _ok(name, "all 960 cases")


_U60_INVERSES = {
    1: 1, 7: 43, 11: 11, 13: 37, 17: 53, 19: 19, 23: 47, 29: 29,
    31: 31, 37: 13, 41: 41, 43: 7, 47: 23, 49: 49, 53: 17, 59: 59,
}


def check_unit_group_tables() -> CheckResult:
    name = "unit-group-tables"
    g10 = unit_group(10)
    if g10.elements != (1, 3, 7, 9) or g10.order != 4:
        return _fail(name, f"U(10) came out as {g10.elements}")
    if g10.inverse != {1: 1, 3: 7, 7: 3, 9: 9}:
        return _fail(name, f"U(10) inverses came out as {g10.inverse}")
    g60 = unit_group(60)
    if g60.order != 16 or g60.inverse != _U60_INVERSES:
        return _fail(name, "U(60) inverses disagree with the reference table")
    for n in range(2, 31):
        group = unit_group(n)
        for u in group.elements:
            v = group.inverse[u]
            if (u * v) % n != 1 or group.inverse[v] != u:
                return _fail(name, f"U({n}): {u} and {v} are not mutual inverses")
    return _ok(name, "U(10), U(60), and inverse involution for n in [2, 30]")


# ---------------------------------------------------------------------------
# rendering


def check_diagram_vertex_counts() -> CheckResult:
    name = "diagram-vertex-counts"
    for k in (0, 3, 9):
        for r in range(1, 60):
            spec = SubsequenceSpec(k=k, r=r)
            scene = build_scene(spec)
            vertices = {p for edge in scene.edges for p in edge}
            if len(vertices) != star_polygon(spec).n:
                return _fail(name, f"(k={k}, r={r}): {len(vertices)} distinct endpoints")
    return _ok(name, "all r in [1, 59] for three start indices")


def _expected_label_line(p: int, label: int) -> str:
    # independent re-derivation of the layout: index 0 at the top, clockwise
    rad = math.radians(90.0 - 6.0 * p)
    x = 300.0 + 264.0 * math.cos(rad)
    y = 300.0 - 264.0 * math.sin(rad)
    return (
        f'<text x="{x:.3f}" y="{y:.3f}" font-size="11" text-anchor="middle" '
        f'dominant-baseline="central">{label}</text>'
    )


def check_diagram_labels() -> CheckResult:
    name = "diagram-labels"
    document = render_svg(build_scene(SubsequenceSpec(k=0, r=1))).decode("utf-8")
    for p in range(60):
        if _expected_label_line(p, fib_mod(p, 10)) not in document:
            return _fail(name, f"label for circle index {p} is missing or misplaced")
    return _ok(name, "all 60 labels at their clockwise-from-top positions")


def check_rotation_equivalence() -> CheckResult:
    name = "diagram-rotation-equivalence"
    for k in range(60):
        for r in range(1, 60):
            first = build_scene(SubsequenceSpec(k=k, r=r)).edges
            second = build_scene(SubsequenceSpec(k=(k + r) % 60, r=r)).edges
            if {frozenset(e) for e in first} != {frozenset(e) for e in second}:
                return _fail(name, f"(k={k}, r={r}): rotated scene draws different edges")
    return _ok(name, "all 3540 (k, r) pairs")


def check_render_determinism() -> CheckResult:
    name = "diagram-determinism"
    spec = SubsequenceSpec(k=3, r=25)
    if render_svg(build_scene(spec)) != render_svg(build_scene(spec)):
        return _fail(name, "two renders of the same full scene differ")
    if render_frames(spec) != render_frames(spec):
        return _fail(name, "two frame sequences of the same spec differ")
    return _ok(name, "repeated renders are byte-identical")


ALL_CHECKS = (
    check_fib_recurrence,
    check_negative_reflection,
    check_parity_law,
    check_five_law,
    check_index_addition,
    check_fifteen_step_multiplier,
    check_antipodal_sums,
    check_period_contents,
    check_polygon_parameters,
    check_reversed_jumps,
    check_twenty_vertex_steps,
    check_square_tuples,
    check_pentagon_tuples,
    check_dodecagon_tuples,
    check_forward_guarantee,
    check_reverse_guarantee,
    check_forward_seed_identity,
    check_reverse_seed_identity,
    check_negative_index_parity,
    check_alignment_agreement,
    check_unit_digit_law,
    check_unit_values_are_units,
    check_inverse_anchor_positions,
    check_four_zeros,
    check_zero_subscripts,
    check_adjacent_zero_one,
    check_first_zero_minimality,
    check_unit_group_tables,
    check_diagram_vertex_counts,
    check_diagram_labels,
    check_rotation_equivalence,
    check_render_determinism,
)


def run_all() -> list[CheckResult]:
    """Run every check in its fixed order."""
    return [check() for check in ALL_CHECKS]
