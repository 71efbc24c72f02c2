from __future__ import annotations

from hilbert_depth import DEFAULT_PATH
from hilbert_depth.exceptions import ConfigurationError
from hilbert_depth.settings.hdepth_settings import HdepthSettings

try:
    HDEPTH_SETTINGS = HdepthSettings(_env_file=f"{DEFAULT_PATH}/.env")
except ValueError as error:
    # pydantic's ValidationError and a malformed config file both land here
    raise ConfigurationError(f"invalid hdepth settings: {error}") from error
