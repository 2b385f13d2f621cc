"""Independent brute-force oracles used by the tests.

Everything here is deliberately written against the definitions, not
against the library's code paths: partition counts come from the Euler
pentagonal recurrence, partition lists from direct recursion on
non-increasing part lists, and splitting types from an exhaustive box
search that only checks the defining constraints.
"""


def euler_partition_counts(n_max):
    """p(0..n_max) via the pentagonal-number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = 1 if k % 2 else -1
            if g1 <= n:
                total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def descending_part_lists(n, cap=None):
    """All non-increasing part lists summing to n, decreasing lexicographic."""
    if cap is None:
        cap = n
    if n == 0:
        return [[]]
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in descending_part_lists(n - first, first):
            out.append([first] + rest)
    return out


def splitting_box_search(deg_e, fiber_deg, c2):
    """Exhaustive search for splitting types over a box that provably
    contains every solution.

    Write gap = 2d - fiber_deg and s = c2_i1 + c2_i2.  Every solution has
    gap >= 1 (from d > fiber_deg - d), gap * |deg_b1| >= 0, and
    s = c2 - d*deg_e - (fiber_deg - 2d)*deg_b1 with the product term
    non-negative, so s <= c2 - d*deg_e <= c2 + |fiber_deg//2 + 1| and
    likewise gap * |deg_b1| <= c2 - d*deg_e.  The ranges below are padded
    past those bounds on every axis.  Returns (d, dprime, deg_b1, c2_i1,
    c2_i2) tuples satisfying the Chern identity and all side conditions.
    """
    colength_hi = c2 + abs(fiber_deg)
    sols = []
    for d in range(fiber_deg // 2 + 1, c2 + abs(fiber_deg) + 2):
        for deg_b1 in range(-c2 - abs(fiber_deg) - 1, 1):
            if deg_e == 0 and deg_b1 == 0:
                continue
            for c2_i1 in range(colength_hi + 1):
                for c2_i2 in range(colength_hi + 1):
                    lhs = d * deg_e + (fiber_deg - 2 * d) * deg_b1 + c2_i1 + c2_i2
                    if lhs == c2:
                        sols.append((d, fiber_deg - d, deg_b1, c2_i1, c2_i2))
    return sols
