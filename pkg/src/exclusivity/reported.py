"""Laboratory reference values for the two experiments.

Central values and one-sigma uncertainties as reported by the labs; the
simulator's outputs are compared against these. The basis-completion
vectors reported alongside the NC bases repeat one pair across six bases
and are kept only so reports can quantify how far off they are.
"""

from __future__ import annotations

# Event probabilities (value, sigma), events u0..u7.
CHSH_EVENT_MEASUREMENTS: tuple[tuple[float, float], ...] = (
    (0.4262, 0.0031),
    (0.4239, 0.0057),
    (0.4313, 0.0069),
    (0.4319, 0.0058),
    (0.4259, 0.0031),
    (0.4257, 0.0045),
    (0.4226, 0.0028),
    (0.4260, 0.0031),
)
CHSH_TOTAL_MEASUREMENT: tuple[float, float] = (3.413, 0.013)

# Event probabilities (value, sigma), events v0..v7.
NC_EVENT_MEASUREMENTS: tuple[tuple[float, float], ...] = (
    (0.2809, 0.0038),
    (0.2854, 0.0038),
    (0.2857, 0.0038),
    (0.3110, 0.0039),
    (0.2983, 0.0038),
    (0.2833, 0.0036),
    (0.2810, 0.0036),
    (0.3095, 0.0038),
)
NC_TOTAL_MEASUREMENT: tuple[float, float] = (2.335, 0.011)

# The 16 product-inequality results W1..W16, all (value, sigma).
W_MEASUREMENTS: tuple[tuple[float, float], ...] = (
    (0.997, 0.016),
    (0.997, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
    (0.997, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
    (0.996, 0.016),
)

# NC event directions as the lab reported them, 3-decimal components.
NC_EVENT_COMPONENTS_REPORTED: tuple[tuple[float, ...], ...] = (
    (1.0, 0.0, 0.0, 0.0, 0.0),
    (0.0, 1.0, 0.0, 0.0, 0.0),
    (0.0, 0.0, 1.0, 0.0, 0.0),
    (0.586, 0.0, 0.0, 0.644, -0.493),
    (0.172, 0.586, 0.0, 0.377, 0.697),
    (0.586, 0.172, 0.586, -0.533, 0.0),
    (0.0, -0.586, -0.172, -0.377, 0.697),
    (0.0, 0.0, -0.586, -0.644, -0.493),
)

# Reported completion vectors per basis, keyed by the basis's target event
# index (the basis measuring v_i is the triple v_{i-2}, v_{i-1}, v_i plus
# these two). Bases 5, 1, 3, 4, 6 and 7 all repeat the same pair, which is
# why reports treat these rows as suspect.
NC_COMPLETIONS_REPORTED: dict[int, tuple[tuple[float, ...], tuple[float, ...]]] = {
    0: ((0.0, -0.806, 0.206, 0.206, -0.515), (0.0, 0.086, 0.76, -0.63, -0.082)),
    2: ((0.0, 0.0, 0.0, 0.707, 0.707), (0.0, 0.0, 0.0, 0.707, -0.707)),
    5: ((0.202, -0.787, 0.213, 0.202, 0.503), (0.494, -0.0855, -0.782, -0.345, 0.137)),
    1: ((0.202, -0.787, 0.213, 0.202, 0.503), (0.494, -0.0855, -0.782, -0.345, 0.137)),
    3: ((0.202, -0.787, 0.213, 0.202, 0.503), (0.494, -0.0855, -0.782, -0.345, 0.137)),
    4: ((0.202, -0.787, 0.213, 0.202, 0.503), (0.494, -0.0855, -0.782, -0.345, 0.137)),
    6: ((0.202, -0.787, 0.213, 0.202, 0.503), (0.494, -0.0855, -0.782, -0.345, 0.137)),
    7: ((0.202, -0.787, 0.213, 0.202, 0.503), (0.494, -0.0855, -0.782, -0.345, 0.137)),
}
