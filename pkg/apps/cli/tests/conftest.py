# apps/cli/tests/conftest.py
import json
from io import StringIO

import pytest
from django.core.management import call_command

from apps.codes.assignment import code_conversion
from apps.codes.lattice import build_seven_qubit
from apps.graphs.graph import Graph


@pytest.fixture
def run():
    """Calls a management command and returns its stdout."""

    def _run(name, *args, **options):
        out = StringIO()
        call_command(name, *args, stdout=out, **options)
        return out.getvalue()

    return _run


@pytest.fixture
def write_json(tmp_path):
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def seven_qubit_graph_file(write_json):
    graph = code_conversion(build_seven_qubit()).graph
    return write_json("seven.json", graph.to_json())


@pytest.fixture
def path3_file(write_json):
    return write_json("path3.json", Graph.from_edges(3, [(0, 1), (1, 2)]).to_json())
