import pytest

from fds import System

# Worked systems reused across the suite.


@pytest.fixture
def sys_polymatrix():
    # updates 1+x3+x1x2, x2+x1x3+x2x3, 1+x1x2x3
    return System.from_strings("1 + x3 + x1*x2", "x2 + x1*x3 + x2*x3", "1 + x1*x2*x3")


@pytest.fixture
def sys_f_edge23():
    return System.from_strings("x2+x3", "1+x2", "x1")


@pytest.fixture
def sys_g_edge13():
    return System.from_strings("x2", "x3", "0")


@pytest.fixture
def sys_swap23():
    # (0, x3, x2): dependency edges (1,2),(1,3)
    return System.from_strings("0", "x3", "x2")


@pytest.fixture
def sys_zero_bound():
    # (x2x3, x1x3, 0): edgeless dependency graph, strict bound gap at t=3
    return System.from_strings("x2*x3", "x1*x3", "0")


@pytest.fixture
def sys_fixed_point():
    # (1+x2x3, x1, 1+x1): unique fixed point under word (1,2,3)
    return System.from_strings("1+x2*x3", "x1", "1+x1")


@pytest.fixture
def sys_two_fours():
    # (x1+x2+x3, 1+x1+x2, x1+x3): two 4-cycles under word (1,2,3)
    return System.from_strings("x1+x2+x3", "1+x1+x2", "x1+x3")


@pytest.fixture
def write_system(tmp_path):
    from fds import format_system

    def _write(f: System, name: str = "system.fds"):
        path = tmp_path / name
        path.write_text(format_system(f))
        return str(path)

    return _write


@pytest.fixture
def write_graph(tmp_path):
    def _write(g, name: str = "graph.txt"):
        path = tmp_path / name
        path.write_text(str(g))
        return str(path)

    return _write
