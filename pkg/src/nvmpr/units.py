"""Unit conversions at the I/O boundary.

All internal frequencies are angular (rad/s) and all internal fields are in
tesla. Files, configs and CLI output use MHz (ordinary frequency) and mT.
These helpers are the only place conversions happen; they accept scalars or
numpy arrays.
"""

import math

TWO_PI = 2.0 * math.pi


def mhz_to_rad(f_mhz):
    """Ordinary frequency in MHz -> angular frequency in rad/s."""
    return f_mhz * (1e6 * TWO_PI)


def rad_to_mhz(omega):
    """Angular frequency in rad/s -> ordinary frequency in MHz."""
    return omega / (1e6 * TWO_PI)


def hz_to_rad(f_hz):
    return f_hz * TWO_PI


def rad_to_hz(omega):
    return omega / TWO_PI


def mt_to_tesla(b_mt):
    return b_mt * 1e-3


def tesla_to_mt(b_t):
    return b_t * 1e3


def ghz_per_tesla_to_rad(gamma_ghz_per_t):
    """Gyromagnetic ratio in GHz/T (ordinary) -> rad/s per tesla."""
    return gamma_ghz_per_t * (1e9 * TWO_PI)
