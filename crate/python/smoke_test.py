"""Smoke test for the cubic_aut_py extension module.

Build the extension first:
    cargo build --release -p cubic-aut-py
then run:
    python3 python/smoke_test.py
"""

import pathlib
import shutil
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "release" / "libcubic_aut_py.so",
        ROOT / "target" / "debug" / "libcubic_aut_py.so",
    ]
    lib = next((p for p in candidates if p.exists()), None)
    if lib is None:
        sys.exit("build the extension first: cargo build --release -p cubic-aut-py")
    staged = lib.parent / "cubic_aut_py.so"
    if not staged.exists() or staged.stat().st_mtime < lib.stat().st_mtime:
        shutil.copy2(lib, staged)
    sys.path.insert(0, str(staged.parent))
    import cubic_aut_py

    return cubic_aut_py


def main():
    ca = load_module()

    # arithmetic
    assert ca.l(57) == 3
    assert ca.o(57) == 54
    assert ca.bound(10) == "384"
    assert ca.bound(57) == str(2**54)

    # graphs round-trip
    k4 = ca.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert k4.is_cubic() and k4.is_connected()
    assert k4.genus() == 3
    assert k4.aut_order() == "24"
    assert ca.Graph.from_graph6(k4.graph6()).is_isomorphic_to(k4)

    # candidate construction
    c12, branch, order = ca.candidate(12)
    assert branch == "three_B_star"
    assert order == "3072"
    assert c12.genus() == 12 and c12.is_cubic()
    assert c12.aut_order() == "3072"

    # census
    census = ca.enumerate_cubic(8)
    assert len(census) == 5
    assert max(int(g.aut_order()) for g in census) == 48

    print("smoke test passed")


if __name__ == "__main__":
    main()
