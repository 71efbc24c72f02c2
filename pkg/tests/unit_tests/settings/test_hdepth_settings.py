from __future__ import annotations

import json
import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from pydantic import ValidationError

from hilbert_depth.settings.hdepth_settings import HdepthSettings
from hilbert_depth.utils.pydantic_advanced_settings import ArgvSettingsSource


class TestHdepthSettings(unittest.TestCase):
    def setUp(self):
        self.workdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.workdir.cleanup)
        self.config_path = Path(self.workdir.name) / "hdepth.json"

    def build(self, argv=("hdepth",), **environment):
        environment.setdefault("HDEPTH_CONFIG", str(self.config_path))
        with patch.dict(os.environ, environment, clear=False), patch("sys.argv", list(argv)):
            return HdepthSettings(_env_file=None)

    def test_defaults(self):
        settings = self.build()
        self.assertEqual(settings.node_cap, 100_000_000)
        self.assertEqual(settings.enumeration_cap, 25)
        self.assertEqual(settings.jobs, 1)
        self.assertEqual(settings.log_level, "WARNING")
        self.assertIsNone(settings.log_file)

    def test_environment_override(self):
        settings = self.build(HDEPTH_NODE_CAP="5000", HDEPTH_JOBS="3")
        self.assertEqual(settings.node_cap, 5000)
        self.assertEqual(settings.jobs, 3)

    def test_command_line_beats_environment(self):
        settings = self.build(("hdepth", "--node_cap", "7", "--n", "4"), HDEPTH_NODE_CAP="5000")
        self.assertEqual(settings.node_cap, 7)

    def test_config_file_sits_between_command_line_and_environment(self):
        self.config_path.write_text(json.dumps({"node_cap": 11, "jobs": 2, "unrelated": True}), "utf-8")
        settings = self.build(HDEPTH_NODE_CAP="5000", HDEPTH_JOBS="3")
        self.assertEqual((settings.node_cap, settings.jobs), (11, 2))
        settings = self.build(("hdepth", "--node_cap", "7"), HDEPTH_NODE_CAP="5000")
        self.assertEqual(settings.node_cap, 7)

    def test_config_file_must_hold_an_object(self):
        self.config_path.write_text("[1, 2]", "utf-8")
        with self.assertRaises(ValueError):
            self.build()

    def test_log_level_is_normalised(self):
        self.assertEqual(self.build(HDEPTH_LOG_LEVEL="info").log_level, "INFO")
        with self.assertRaises(ValidationError):
            self.build(HDEPTH_LOG_LEVEL="loud")

    def test_invalid_values(self):
        with self.assertRaises(ValidationError):
            self.build(HDEPTH_ENUMERATION_CAP="40")
        with self.assertRaises(ValidationError):
            self.build(HDEPTH_NODE_CAP="0")


class TestArgvSettingsSource(unittest.TestCase):
    def test_only_exact_field_flags_are_taken(self):
        argv = ["verify", "lemma", "--node-cap", "9", "--node", "3", "--jobs", "4"]
        source = ArgvSettingsSource(HdepthSettings, argv)
        self.assertEqual(source(), {"jobs": "4"})


if __name__ == "__main__":
    unittest.main()
