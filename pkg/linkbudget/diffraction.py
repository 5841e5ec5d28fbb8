"""Far-field diffraction and pointing-jitter collection fractions.

A uniformly illuminated circular transmitter of diameter D produces an Airy
pattern at slant range z. The power inside a centred receiver of radius a is
the encircled energy E(x) = 1 - J0(x)^2 - J1(x)^2 with x = pi*D*a/(lambda*z).

Gaussian pointing jitter displaces the pattern by a 2-D normal offset of
spatial standard deviation s = sigma*z. Writing E'(u) = 2*J1(u)^2/u, the
average collected fraction is

    integral_0^inf E'(u) * P(|offset + rho(u)| <= a) du,   rho(u) = u*lambda*z/(pi*D)

where the probability that an offset point lands in the disc is a
non-central chi-square CDF with 2 degrees of freedom.
"""

import math
from functools import lru_cache
from typing import Optional

from scipy import integrate, special

from config import get_config
from errors import FarFieldViolationError, QuadratureError

# Jitter tail cut-off in standard deviations beyond the receiver edge
JITTER_TAIL_SIGMAS = 12.0


def loss_db(eta: float) -> float:
    """Loss in dB, -10*log10(eta); inf for eta == 0."""
    if eta <= 0.0:
        return math.inf
    return -10.0 * math.log10(eta)


def fraction_from_db(db: float) -> float:
    return 10.0 ** (-db / 10.0)


def fresnel_distance(wavelength_m: float, tx_aperture_m: float, factor: Optional[float] = None) -> float:
    """Shortest slant range accepted by the far-field model."""
    if factor is None:
        factor = get_config().far_field_factor
    return factor * tx_aperture_m**2 / wavelength_m


def check_far_field(
    wavelength_m: float, tx_aperture_m: float, slant_m: float, factor: Optional[float] = None
) -> None:
    limit = fresnel_distance(wavelength_m, tx_aperture_m, factor)
    if slant_m < limit:
        raise FarFieldViolationError(slant_m, limit)


def encircled_energy(x: float) -> float:
    """Airy encircled energy 1 - J0(x)^2 - J1(x)^2."""
    value = 1.0 - special.j0(x) ** 2 - special.j1(x) ** 2
    return min(1.0, max(0.0, float(value)))


def airy_collection_fraction(
    wavelength_m: float,
    tx_aperture_m: float,
    rx_aperture_m: float,
    slant_m: float,
    far_field_factor: Optional[float] = None,
) -> float:
    """Fraction of transmitted power inside a beam-centred receiver."""
    check_far_field(wavelength_m, tx_aperture_m, slant_m, far_field_factor)
    x = math.pi * tx_aperture_m * (rx_aperture_m / 2.0) / (wavelength_m * slant_m)
    return encircled_energy(x)


@lru_cache(maxsize=65_536)
def _smeared_fraction(
    wavelength_m: float,
    tx_aperture_m: float,
    rx_aperture_m: float,
    sigma_rad: float,
    slant_m: float,
    abs_tol: float,
    far_field_factor: float,
) -> float:
    rx_radius = rx_aperture_m / 2.0
    spread = sigma_rad * slant_m
    if spread <= 1e-6 * rx_radius:
        return airy_collection_fraction(
            wavelength_m, tx_aperture_m, rx_aperture_m, slant_m, far_field_factor
        )

    k = math.pi * tx_aperture_m / (wavelength_m * slant_m)  # u per metre in the receiver plane
    disc = (rx_radius / spread) ** 2

    def integrand(u: float) -> float:
        if u == 0.0:
            return 0.0
        kernel = 2.0 * special.j1(u) ** 2 / u
        return kernel * special.chndtr(disc, 2.0, (u / (k * spread)) ** 2)

    u_edge = k * rx_radius
    u_max = k * (rx_radius + JITTER_TAIL_SIGMAS * spread)
    value, abserr = integrate.quad(
        integrand, 0.0, u_max, points=[u_edge], epsabs=0.1 * abs_tol, epsrel=0.0, limit=500
    )
    if not math.isfinite(value) or abserr > abs_tol:
        raise QuadratureError(
            abserr, abs_tol, detail=f"slant {slant_m / 1e3:.1f} km, sigma {sigma_rad:.2e} rad"
        )
    return min(1.0, max(0.0, value))


def pointing_smeared_fraction(
    channel,
    slant_m: float,
    abs_tol: Optional[float] = None,
    far_field_factor: Optional[float] = None,
) -> float:
    """Collection fraction averaged over Gaussian pointing jitter.

    Accepts any object with wavelength_m, tx_aperture_m, rx_aperture_m and
    pointing_sigma_rad (normally an OpticalChannel). The tolerance and the
    far-field factor fall back to the global Config.
    """
    if far_field_factor is None:
        far_field_factor = get_config().far_field_factor
    check_far_field(channel.wavelength_m, channel.tx_aperture_m, slant_m, far_field_factor)
    if channel.pointing_sigma_rad == 0.0:
        return airy_collection_fraction(
            channel.wavelength_m, channel.tx_aperture_m, channel.rx_aperture_m, slant_m, far_field_factor
        )
    if abs_tol is None:
        abs_tol = get_config().quad_abs_tol
    return _smeared_fraction(
        float(channel.wavelength_m),
        float(channel.tx_aperture_m),
        float(channel.rx_aperture_m),
        float(channel.pointing_sigma_rad),
        float(slant_m),
        float(abs_tol),
        float(far_field_factor),
    )
