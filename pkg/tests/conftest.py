"""Shared helpers for the test suite."""

import io
import json
import contextlib

import pytest

from interfere.cli import main as cli_main


def run_cli(argv):
    """Invoke the command line entry point in-process.

    Returns (exit_code, raw_stdout_text).
    """
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(list(argv))
    return code, buf.getvalue()


def run_cli_json(argv):
    code, text = run_cli(argv)
    return code, json.loads(text)


@pytest.fixture
def cli():
    return run_cli


@pytest.fixture
def cli_json():
    return run_cli_json
