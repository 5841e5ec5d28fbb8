"""Downlink optical transmission: diffraction, pointing jitter and atmosphere."""

from .atmosphere import AtmosphereModel, atmospheric_transmittance
from .diffraction import (
    airy_collection_fraction,
    check_far_field,
    encircled_energy,
    fraction_from_db,
    fresnel_distance,
    loss_db,
    pointing_smeared_fraction,
)
from .transmission import (
    FIBER_ATTENUATION_DB_PER_KM,
    OpticalChannel,
    ProfileSummary,
    TransmissionProfile,
    fiber_loss_db,
    fiber_transmission,
    profile_times,
    single_photon_transmission,
    two_photon_profile,
)

__all__ = [
    "AtmosphereModel",
    "atmospheric_transmittance",
    "airy_collection_fraction",
    "check_far_field",
    "encircled_energy",
    "fraction_from_db",
    "fresnel_distance",
    "loss_db",
    "pointing_smeared_fraction",
    "FIBER_ATTENUATION_DB_PER_KM",
    "OpticalChannel",
    "ProfileSummary",
    "TransmissionProfile",
    "fiber_loss_db",
    "fiber_transmission",
    "profile_times",
    "single_photon_transmission",
    "two_photon_profile",
]
