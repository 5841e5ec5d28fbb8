"""Scenario model and preset resolution.

A scenario file is flat key/value data. resolve_scenario() expands unit
aliases and presets into a complete Scenario; the resolved form is what
manifests store, so later preset changes cannot alter a recorded run.
"""

import math
from typing import Any, Dict, List, Literal, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from config import Config, get_config
from errors import ConfigurationError
from knowledge.atmosphere_loader import load_atmosphere
from knowledge.presets import MODE_DEFAULTS, direct_channel_preset, get_channel_preset
from linkbudget.atmosphere import AtmosphereModel
from linkbudget.transmission import OpticalChannel
from orbital.geometry import Direction, EarthModel, geostationary_altitude
from repeater.rates import Efficiencies

CHANNEL_FIELDS = ("wavelength_m", "tx_aperture_m", "rx_aperture_m", "pointing_sigma_rad", "excess_loss_db")

KM_ALIASES = {
    "total_ground_distance_km": "total_ground_distance_m",
    "satellite_altitude_km": "satellite_altitude_m",
}


class Scenario(BaseModel):
    """Fully resolved scenario."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    mode: Literal["repeater", "direct", "fiber"] = Field(..., description="Distribution scheme")
    total_ground_distance_m: float = Field(..., ge=0, description="End-to-end ground distance L")
    satellite_altitude_m: Optional[float] = Field(None, gt=0, description="Orbit altitude h")
    nesting_n: Union[int, Literal["auto"]] = Field("auto", description="Nesting level or 'auto'")
    direction: Optional[Literal["counter-rotating", "co-rotating"]] = Field(None)

    channel_preset: Optional[str] = Field(None, description="Channel preset the optics came from")
    wavelength_m: Optional[float] = Field(None, gt=0)
    tx_aperture_m: Optional[float] = Field(None, gt=0)
    rx_aperture_m: Optional[float] = Field(None, gt=0)
    pointing_sigma_rad: Optional[float] = Field(None, ge=0)
    excess_loss_db: Optional[float] = Field(None, ge=0)
    atmosphere: str = Field("calibrated", description="'calibrated', 'vacuum' or a CSV path")
    atmosphere_wavelengths_m: Optional[Tuple[float, ...]] = Field(None, description="Resolved table wavelengths")
    atmosphere_zenith: Optional[Tuple[float, ...]] = Field(None, description="Resolved zenith transmittance")
    atmosphere_label: Optional[str] = Field(None)

    eta_source: float = Field(0.9, ge=0, le=1)
    eta_qnd: float = Field(0.9, ge=0, le=1)
    eta_mem_write: float = Field(0.9, ge=0, le=1)
    eta_mem_read: float = Field(0.9, ge=0, le=1)
    eta_detector: float = Field(0.9, ge=0, le=1)
    source_rate_hz: float = Field(..., gt=0)

    background: Literal["day", "night", "none"] = Field("day")
    filter_bw_hz: Optional[float] = Field(None, gt=0, description="Receiver filter; defaults to source rate")
    fov_rad: float = Field(10e-6, gt=0, description="Receiver field of view")
    noise_both_stations: bool = Field(True)

    step_s: float = Field(..., gt=0)
    min_elevation_deg: float = Field(..., ge=0, lt=90)

    mc_trials: int = Field(..., ge=1)
    mc_seed: int = Field(..., ge=0)
    mc_hazard: Literal["flyby-average", "profile"] = Field(
        "flyby-average", description="Oracle level-0 success: constant P_EG or the sampled profile"
    )

    @model_validator(mode="after")
    def _check_complete(self) -> "Scenario":
        if self.mode == "fiber":
            return self
        missing = [name for name in ("satellite_altitude_m",) + CHANNEL_FIELDS if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.mode} scenario needs {', '.join(missing)}")
        if self.direction is None:
            raise ValueError("direction is required for satellite modes")
        if self.mode == "repeater" and isinstance(self.nesting_n, int) and self.nesting_n < 0:
            raise ValueError("nesting_n must be >= 0")
        if self.atmosphere_wavelengths_m is None or self.atmosphere_zenith is None:
            raise ValueError("atmosphere table was not resolved")
        if len(self.atmosphere_wavelengths_m) != len(self.atmosphere_zenith):
            raise ValueError("atmosphere table columns differ in length")
        return self

    @property
    def min_elevation_rad(self) -> float:
        return math.radians(self.min_elevation_deg)

    @property
    def orbit_direction(self) -> Direction:
        return Direction(self.direction)

    @property
    def filter_bandwidth_hz(self) -> float:
        return self.filter_bw_hz if self.filter_bw_hz is not None else self.source_rate_hz

    def channel(self) -> OpticalChannel:
        return OpticalChannel(**{name: getattr(self, name) for name in CHANNEL_FIELDS})

    def atmosphere_model(self) -> AtmosphereModel:
        """The inlined table, airmass capped at the elevation cutoff."""
        if self.atmosphere_wavelengths_m is None or self.atmosphere_zenith is None:
            raise ConfigurationError(f"{self.mode} scenario has no atmosphere table")
        return AtmosphereModel(
            wavelengths_m=tuple(self.atmosphere_wavelengths_m),
            zenith_transmittance=tuple(self.atmosphere_zenith),
            airmass_cap_elevation_rad=self.min_elevation_rad,
            label=self.atmosphere_label or self.atmosphere,
        )

    def efficiencies(self) -> Efficiencies:
        return Efficiencies(
            source=self.eta_source,
            qnd=self.eta_qnd,
            mem_write=self.eta_mem_write,
            mem_read=self.eta_mem_read,
            detector=self.eta_detector,
        )

    def nesting_candidates(self, config: Optional[Config] = None) -> List[int]:
        if self.mode != "repeater":
            return [0]
        if self.nesting_n == "auto":
            return list((config or get_config()).nesting_candidates)
        return [int(self.nesting_n)]

    def with_nesting(self, nesting_n: int) -> "Scenario":
        return self.model_copy(update={"nesting_n": nesting_n})


def _field_errors(error: ValidationError) -> str:
    lines = []
    for item in error.errors():
        where = ".".join(str(part) for part in item["loc"]) or "scenario"
        lines.append(f"  {where}: {item['msg']}")
    return "\n".join(lines)


def _normalise_units(data: Dict[str, Any], earth: EarthModel) -> Dict[str, Any]:
    for alias, target in KM_ALIASES.items():
        if alias in data:
            if target in data:
                raise ConfigurationError(f"give either {alias} or {target}, not both")
            value = data.pop(alias)
            data[target] = value if isinstance(value, str) else float(value) * 1e3
    if isinstance(data.get("satellite_altitude_m"), str):
        if data["satellite_altitude_m"].lower() != "geo":
            raise ConfigurationError(
                f"satellite altitude must be a number or 'geo', got {data['satellite_altitude_m']!r}"
            )
        data["satellite_altitude_m"] = geostationary_altitude(earth)
        data.setdefault("direction", "co-rotating")
    if "min_elevation_rad" in data:
        data["min_elevation_deg"] = math.degrees(float(data.pop("min_elevation_rad")))
    return data


def resolve_scenario(raw: Mapping[str, Any], config: Optional[Config] = None) -> Scenario:
    """Expand aliases and presets, then validate into a complete Scenario."""
    config = config or get_config()
    data = _normalise_units(dict(raw), EarthModel.from_config(config))

    mode = data.get("mode")
    if mode not in MODE_DEFAULTS:
        raise ConfigurationError(
            f"Invalid scenario:\n  mode: expected one of {', '.join(MODE_DEFAULTS)}, got {mode!r}"
        )
    for key, value in MODE_DEFAULTS[mode].items():
        data.setdefault(key, value)

    if mode == "direct" and "channel_preset" not in data and isinstance(
        data.get("satellite_altitude_m"), (int, float)
    ):
        data["channel_preset"] = direct_channel_preset(float(data["satellite_altitude_m"]))
    if data.get("channel_preset"):
        try:
            preset = get_channel_preset(data["channel_preset"])
        except KeyError as e:
            raise ConfigurationError(f"Invalid scenario:\n  channel_preset: {e.args[0]}") from None
        for key, value in preset.items():
            data.setdefault(key, value)

    data.setdefault("step_s", config.step_s)
    data.setdefault("min_elevation_deg", config.min_elevation_deg)
    data.setdefault("mc_trials", config.mc_trials)
    data.setdefault("mc_seed", config.mc_seed)

    # Inline the table so a manifest replays without the data directory
    if mode != "fiber" and "atmosphere_zenith" not in data:
        table = load_atmosphere(str(data.get("atmosphere", "calibrated")), config=config)
        data["atmosphere_wavelengths_m"] = table.wavelengths_m
        data["atmosphere_zenith"] = table.zenith_transmittance
        data["atmosphere_label"] = table.label

    try:
        return Scenario.model_validate(data)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid scenario:\n{_field_errors(e)}") from e


def scenario_from_manifest(data: Mapping[str, Any]) -> Scenario:
    """Rebuild an already resolved scenario without re-applying presets."""
    try:
        return Scenario.model_validate(dict(data))
    except ValidationError as e:
        raise ConfigurationError(f"Invalid scenario in manifest:\n{_field_errors(e)}") from e
