"""Walk the analysis pipeline on a handful of classic graphs.

Run: python3 demos/quickstart.py
"""

from beilab import (analyze, cm_check, complete_graph, cycle_graph,
                    depth_JG, path_graph, report_json)


def show(name, g):
    r = analyze(g)
    print(f"{name:>5}  unmixed={r.unmixed!s:5}  accessible={r.accessible!s:5}"
          f"  cm={r.cm!s:5}  depth={r.depth}  dim={r.dim}  girth={r.girth}")


def main():
    print("graph  summary (exact, over the rationals)")
    for n in range(2, 7):
        show(f"P_{n}", path_graph(n))
    for n in range(3, 7):
        show(f"C_{n}", cycle_graph(n))
    for n in range(2, 6):
        show(f"K_{n}", complete_graph(n))

    # paths are the base Cohen-Macaulay family; cycles are CM only at n=3
    assert cm_check(path_graph(6)).is_cm
    assert cm_check(cycle_graph(3)).is_cm
    assert not cm_check(cycle_graph(5)).is_cm

    # CM means depth equals dimension; C_5 falls one short
    d5 = depth_JG(cycle_graph(5))
    print(f"\nC_5: depth {d5.depth}, dim {analyze(cycle_graph(5)).dim}")

    print("\nmachine-readable report for P_4:")
    print(report_json(analyze(path_graph(4))))


if __name__ == "__main__":
    main()
