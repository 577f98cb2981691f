"""Turn a dataclass config into command-line flags."""

import argparse
import dataclasses


def parse_config(cls, description=None):
    parser = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        default = f.default
        if isinstance(default, tuple):
            parser.add_argument(f"--{f.name.replace('_', '-')}", default=default, nargs="+", type=str)
        else:
            parser.add_argument(f"--{f.name.replace('_', '-')}", default=default, type=type(default))
    args = parser.parse_args()
    return cls(**vars(args))
