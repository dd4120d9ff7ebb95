#!/usr/bin/env python3
"""Reproduce the tight-binding band-structure experiment.

Solves all four bands along the G-X-M-G-R path with the reciprocal-orbital
ansatz and writes band_structure.csv / band_structure.json next to -o.

Same as: oavqe band-structure [--config ...]
"""
import sys

from oavqe import cli

if __name__ == "__main__":
    sys.exit(cli.main(["band-structure"] + sys.argv[1:]))
