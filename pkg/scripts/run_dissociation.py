#!/usr/bin/env python3
"""Reproduce the H2 dissociation experiment.

Solves all six two-electron levels at every fixture geometry (default
Trotter r=1) and writes dissociation.csv / dissociation.json next to -o.

Same as: oavqe dissociation [--config ...]
"""
import sys

from oavqe import cli

if __name__ == "__main__":
    sys.exit(cli.main(["dissociation"] + sys.argv[1:]))
