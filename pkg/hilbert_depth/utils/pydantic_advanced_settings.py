"""
Settings sources layered on top of pydantic-settings.

Precedence, highest first: constructor keywords, ``--field_name value`` process
arguments, a JSON config file, environment, ``.env`` file, secrets directory.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from abc import abstractmethod
from pathlib import Path
from typing import Any
from typing import Dict
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Type

from pydantic.fields import FieldInfo
from pydantic_settings import BaseSettings
from pydantic_settings import PydanticBaseSettingsSource

CONFIG_FILE_ENV = "HDEPTH_CONFIG"
DEFAULT_CONFIG_FILE = "hdepth.json"


class MappingSettingsSource(PydanticBaseSettingsSource):
    """A source backed by one flat mapping; only keys naming a settings field are used."""

    @abstractmethod
    def load(self) -> Dict[str, Any]:
        ...

    def get_field_value(self, field: FieldInfo, field_name: str) -> Tuple[Any, str, bool]:
        return self.load().get(field_name), field_name, False

    def __call__(self) -> Dict[str, Any]:
        values = self.load()
        return {name: values[name] for name in self.settings_cls.model_fields if values.get(name) is not None}


class ArgvSettingsSource(MappingSettingsSource):
    """
    Overrides such as ``--node_cap 5000`` taken from the process arguments.

    Only exact field-name flags are consumed. The parser has no help option and
    no prefix matching, so the click commands keep all of their own flags.
    """

    def __init__(self, settings_cls: Type[BaseSettings], argv: Optional[Sequence[str]] = None):
        super().__init__(settings_cls)
        parser = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
        for field_name in settings_cls.model_fields:
            parser.add_argument(f"--{field_name}", dest=field_name)
        arguments = sys.argv[1:] if argv is None else list(argv)
        self._values = vars(parser.parse_known_args(arguments)[0])

    def load(self) -> Dict[str, Any]:
        return self._values


class JsonFileSettingsSource(MappingSettingsSource):
    """A JSON object in ``hdepth.json`` under the working directory, or in the file named by ``HDEPTH_CONFIG``."""

    def __init__(self, settings_cls: Type[BaseSettings], path: Optional[Path] = None):
        super().__init__(settings_cls)
        self.path = Path(path or os.environ.get(CONFIG_FILE_ENV, DEFAULT_CONFIG_FILE))
        self._values: Optional[Dict[str, Any]] = None

    def load(self) -> Dict[str, Any]:
        if self._values is None:
            self._values = self._read()
        return self._values

    def _read(self) -> Dict[str, Any]:
        if not self.path.is_file():
            return {}
        content = json.loads(self.path.read_text(self.config.get("env_file_encoding") or "utf-8"))
        if not isinstance(content, dict):
            raise ValueError(f"{self.path} must hold a JSON object, got {type(content).__name__}")
        return content


class CustomizedSettings(BaseSettings):
    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,
            ArgvSettingsSource(settings_cls),
            JsonFileSettingsSource(settings_cls),
            env_settings,
            dotenv_settings,
            file_secret_settings,
        )


__all__ = ("ArgvSettingsSource", "CustomizedSettings", "JsonFileSettingsSource")
