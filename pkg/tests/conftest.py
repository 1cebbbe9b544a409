import pytest

from survival.graphs import parse_graph

ALL_FAMILIES = ["z:1:std", "z:2:std", "z:2:diag", "ll-z", "ll-z2", "free23", "tree:3", "ladder"]

# radius at which exhaustive per-vertex checks stay cheap
EXHAUSTIVE_RADIUS = {"z:1:std": 8, "z:2:std": 8, "z:2:diag": 8, "ll-z": 8, "ll-z2": 4,
                     "free23": 8, "tree:3": 8, "ladder": 8}


@pytest.fixture(params=ALL_FAMILIES)
def spec(request):
    return parse_graph(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for key in sorted(lines):
            terminalreporter.write_line(lines[key])
