"""High-precision oracle for the constants frozen into the C++ tests.

Run with `python3 tests/oracles/frozen_values.py`; every value is evaluated
with mpmath at 50 digits, independently of the C++ implementation.
"""
from mpmath import mp, mpf, exp, log, log1p, expm1

mp.dps = 50
h = mpf("6.62607015e-34")
kB = mpf("1.380649e-23")


def occupancy(x):  # x = h nu / k_B T
    return 1 / expm1(x)


def temperature(n):  # natural units
    return 1 / log(1 + 1 / mpf(n))


def entropy(n):
    n = mpf(n)
    return n * log(1 + 1 / n)


def H(p):
    p = mpf(p)
    return -(p * log(p) + (1 - p) * log(1 - p))


rows = {
    "occupancy(T=1000)": occupancy(mpf(1) / 1000),
    "temperature(n=1e9)": temperature(mpf(10) ** 9),
    "temperature_si(nu=1.934e14, n=1)": h * mpf("1.934e14") / (kB * log(2)),
    "entropy(n=1e7)": entropy(mpf(10) ** 7),
    "series(n=1e7)": 1 - 1 / (2 * mpf(10) ** 7) + 1 / (3 * mpf(10) ** 14),
    "pulse_energy_si(nu=1.934e14, n=1000)": 1000 * h * mpf("1.934e14"),
    "H(0.25)": H(mpf("0.25")),
    "8*H(0.25)": 8 * H(mpf("0.25")),
    "dS(n=1e9, g=0.5)": entropy(mpf(5) * 10 ** 8) - entropy(mpf(10) ** 9),
    "dS(n=1 -> 0.5)": entropy(mpf("0.5")) - entropy(1),
    "0.5 ln3 - ln2": mpf("0.5") * log(3) - log(2),
    "T(1e6*0.5)/T(1e6)": temperature(mpf(5) * 10 ** 5) / temperature(mpf(10) ** 6),
    "deficiency n=1 per slot": log(2) * (1 - log(2)),
    "shortfall(5e5)": 1 - entropy(mpf(5) * 10 ** 5),
}
for k, v in rows.items():
    print(f"{k:40s} {mp.nstr(v, 20)}")


# Link work with exact single-mode temperatures: one span of transmission s,
# amplifier restoring n0, W / Q0 = s (T(n0)/T(s n0) - 1).
def link_work_ratio(n0, s, N=1):
    n0 = mpf(n0)
    return N * s * (temperature(n0) / temperature(s * n0) - 1)


print(f"{'W/Q0 n0=1e6 s=0.1':40s} {mp.nstr(link_work_ratio(10**6, mpf('0.1')), 20)}")
print(f"{'W/Q0 n0=1e12 s=0.1':40s} {mp.nstr(link_work_ratio(10**12, mpf('0.1')), 20)}")
