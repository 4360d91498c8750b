import sys
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from _report import ACCEPTANCE_LINES
from oracles import graph_from_nx

from netmoments.graph import from_edges


@pytest.fixture
def named():
    return {
        "edge": from_edges(2, [(0, 1)]),
        "path3": from_edges(3, [(0, 1), (1, 2)]),
        "K3": graph_from_nx(nx.complete_graph(3)),
        "K4": graph_from_nx(nx.complete_graph(4)),
        "C4": graph_from_nx(nx.cycle_graph(4)),
        "C5": graph_from_nx(nx.cycle_graph(5)),
        "petersen": graph_from_nx(nx.petersen_graph()),
        "star4": graph_from_nx(nx.star_graph(4)),
        "tri_edge": from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]),
        "empty3": from_edges(3, []),
    }


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
