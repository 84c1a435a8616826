"""Turn a dataclass of experiment settings into command-line flags."""

import argparse
import dataclasses
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
# the seeded instance generators live with the tests
sys.path.insert(0, str(ROOT / "tests"))


def parse_config(cls, description: str):
    parser = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        default = f.default
        parser.add_argument(f"--{f.name.replace('_', '-')}", type=type(default), default=default)
    return cls(**vars(parser.parse_args()))
