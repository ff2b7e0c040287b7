#!/usr/bin/env python3
"""Run the acceptance suite and show one PASS/FAIL line per criterion."""

import pathlib
import sys

import pytest

if __name__ == "__main__":
    tests = pathlib.Path(__file__).resolve().parent.parent / "tests" / "test_acceptance.py"
    sys.exit(pytest.main(["-s", "-q", str(tests), *sys.argv[1:]]))
